#pragma once
// Permutation representation of a pile of stamps, plus the rotation
// primitives shared by the generators, the oracle and the verifier.
//
// A pile of n stamps is written as the permutation p1..pn of stamp labels
// read left-to-right through the pile. Positions and labels are 1-based.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldgray {

// Value type for a pile: an immutable permutation of 1..n.
class Pile {
 public:
  Pile() = default;
  // Throws std::invalid_argument unless labels is a permutation of 1..n, n >= 1.
  explicit Pile(std::vector<int> labels);

  static Pile identity(int n);  // 1 2 ... n

  // Accepts the canonical space-separated form ("6 5 1 2 3 4 7") and, for
  // n <= 9, the compact digit form ("6512347"). Returns nullopt on anything
  // that is not a permutation of 1..n.
  static std::optional<Pile> parse(std::string_view text);

  int order() const { return static_cast<int>(seq_.size()); }
  int at(int pos) const;  // 1-based; throws std::out_of_range
  std::span<const int> labels() const { return seq_; }

  std::string str() const;      // "6 5 1 2 3 4 7"
  std::string compact() const;  // "6512347"; throws std::length_error if order > 9

  friend bool operator==(const Pile&, const Pile&) = default;
  friend auto operator<=>(const Pile&, const Pile&) = default;

 private:
  std::vector<int> seq_;
};

// One Gray-code move: the block at positions i..j is moved to position k.
// Legal when k < i <= j <= n; the identity is deliberately not expressible.
struct StampRotation {
  int i = 0;
  int j = 0;
  int k = 0;
  friend bool operator==(const StampRotation&, const StampRotation&) = default;
};

// Per-level rotation directions q0..q(n-1); 1 = right rotation, 0 = left.
// Both generators start with all levels positive.
class SignArray {
 public:
  explicit SignArray(int n) : q_(static_cast<std::size_t>(n), 1) {}
  int size() const { return static_cast<int>(q_.size()); }
  bool is_right(int t) const { return q_[static_cast<std::size_t>(t)] != 0; }
  void flip(int t) { q_[static_cast<std::size_t>(t)] ^= 1; }

 private:
  std::vector<std::uint8_t> q_;
};

bool is_permutation_1_to_n(std::span<const int> labels);

// p1..p(k-1) pi..pj pk..p(i-1) p(j+1)..pn. Throws on malformed indices.
Pile apply_rotation(const Pile& p, const StampRotation& r);

// Suffix pi..pn moves to the front; identity for i == 1.
Pile rotate_left(const Pile& p, int i);

// Prefix p1..pj moves to the end; identity for j == n.
Pile rotate_right(const Pile& p, int j);

// 1-based index of a label within p.
int index_of(int label, const Pile& p);

// The n circular rotations of p, starting at p itself, each obtained from
// the previous one by moving the first symbol to the last position.
std::vector<Pile> string_rotations(const Pile& p);

}  // namespace foldgray

#include "foldgray/pile.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace foldgray {

bool is_permutation_1_to_n(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : labels) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Pile::Pile(std::vector<int> labels) : seq_(std::move(labels)) {
  if (seq_.empty() || !is_permutation_1_to_n(seq_))
    throw std::invalid_argument("Pile: labels must be a permutation of 1..n");
}

Pile Pile::identity(int n) {
  if (n < 1) throw std::invalid_argument("Pile: order must be at least 1");
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  return Pile(std::move(seq));
}

std::optional<Pile> Pile::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.empty()) return std::nullopt;

  std::vector<int> labels;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // Single multi-character token: compact digit form, one stamp per digit.
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') return std::nullopt;
      labels.push_back(c - '0');
    }
  } else {
    for (std::string_view tok : tokens) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
      labels.push_back(value);
    }
  }
  if (!is_permutation_1_to_n(labels)) return std::nullopt;
  return Pile(std::move(labels));
}

int Pile::at(int pos) const {
  if (pos < 1 || pos > order()) throw std::out_of_range("Pile::at: position out of range");
  return seq_[static_cast<std::size_t>(pos - 1)];
}

std::string Pile::str() const {
  std::string out;
  for (std::size_t s = 0; s < seq_.size(); ++s) {
    if (s > 0) out += ' ';
    out += std::to_string(seq_[s]);
  }
  return out;
}

std::string Pile::compact() const {
  if (order() > 9) throw std::length_error("Pile::compact: only defined for order <= 9");
  std::string out;
  for (int v : seq_) out += static_cast<char>('0' + v);
  return out;
}

Pile apply_rotation(const Pile& p, const StampRotation& r) {
  const int n = p.order();
  if (!(1 <= r.k && r.k < r.i && r.i <= r.j && r.j <= n))
    throw std::invalid_argument("apply_rotation: need 1 <= k < i <= j <= n");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 1; s < r.k; ++s) out.push_back(p.at(s));
  for (int s = r.i; s <= r.j; ++s) out.push_back(p.at(s));
  for (int s = r.k; s < r.i; ++s) out.push_back(p.at(s));
  for (int s = r.j + 1; s <= n; ++s) out.push_back(p.at(s));
  return Pile(std::move(out));
}

Pile rotate_left(const Pile& p, int i) {
  const int n = p.order();
  if (i < 1 || i > n) throw std::invalid_argument("rotate_left: index out of range");
  if (i == 1) return p;
  // Left rotation is the block move (i..n -> 1); expressed directly here so
  // the two entry points cannot drift apart.
  return apply_rotation(p, StampRotation{i, n, 1});
}

Pile rotate_right(const Pile& p, int j) {
  const int n = p.order();
  if (j < 1 || j > n) throw std::invalid_argument("rotate_right: index out of range");
  if (j == n) return p;
  return rotate_left(p, j + 1);
}

int index_of(int label, const Pile& p) {
  if (label < 1 || label > p.order()) throw std::invalid_argument("index_of: label out of range");
  for (int s = 1; s <= p.order(); ++s)
    if (p.at(s) == label) return s;
  throw std::logic_error("index_of: label absent from a valid pile");
}

std::vector<Pile> string_rotations(const Pile& p) {
  std::vector<Pile> out;
  out.reserve(static_cast<std::size_t>(p.order()));
  Pile cur = p;
  for (int s = 0; s < p.order(); ++s) {
    out.push_back(cur);
    if (s + 1 < p.order()) cur = rotate_right(cur, 1);
  }
  return out;
}

}  // namespace foldgray

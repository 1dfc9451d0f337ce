#pragma once
// Rotation Gray codes for stamp foldings and semi-meanders. Consecutive
// strings in either listing differ by one stamp rotation, and the listings
// wrap around cyclically.
//
// Two engines produce the identical listing:
//   gen_recursive  - depth-first over levels 1..n; at level t every rotation
//                    of the current order-(t+1) semi-meander that is again a
//                    semi-meander becomes a sibling, and each child appends
//                    or prepends the next stamp. Amortized O(1) per stamp
//                    folding and O(n) per semi-meander.
//   gen_iterative  - loop-only engine with O(n) worst case per string. After
//                    each emission it scans levels top-down, unwinding the
//                    levels whose rotation class is exhausted, then rotates
//                    the deepest unfinished window in place.
//
// The step count to the next valid rotation comes from a closed-form parity
// rule (next_steps below); nothing is ever searched and revalidated.
//
// Sinks receive a transient PileView; they must copy what they keep and must
// not call back into the generator. Rotation directions alternate per level
// through a shared SignArray, which is what makes the ends of consecutive
// classes join up into one Gray sequence.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "foldgray/pile.hpp"
#include "foldgray/ring.hpp"

namespace foldgray {

enum class GenKind { StampFoldings, SemiMeanders };

struct GenConfig {
  int n = 1;
  GenKind kind = GenKind::StampFoldings;
};

// Operation counters for the complexity tests and the bench harness.
struct GenCounters {
  std::uint64_t rotations = 0;  // single-link head moves
  std::uint64_t scans = 0;      // nodes examined while scanning or descending
  std::uint64_t splices = 0;    // insertions, removals and window splices
  std::uint64_t nsm_calls = 0;  // next-step computations

  void rotation(std::uint64_t k = 1) { rotations += k; }
  void scan(std::uint64_t k = 1) { scans += k; }
  void splice_op() { ++splices; }
  void nsm() { ++nsm_calls; }
  std::uint64_t total() const { return rotations + scans + splices + nsm_calls; }
};

// Stand-in whose increments compile away.
struct NoCounters {
  void rotation(std::uint64_t = 1) {}
  void scan(std::uint64_t = 1) {}
  void splice_op() {}
  void nsm() {}
};

inline NoCounters& no_counters() {
  static NoCounters nc;
  return nc;
}

using Listing = std::vector<Pile>;

template <typename S>
concept PileSink = std::invocable<S&, const PileView&>;

namespace detail {

inline void validate(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("generator: order must be at least 1");
}

template <typename Counters>
int rotate_head(const LabelRing& ring, int head, int steps, bool right, int len, Counters& ctr) {
  steps %= len;  // a full turn of the window is the identity
  ctr.rotation(static_cast<std::uint64_t>(steps));
  for (int s = 0; s < steps; ++s) head = right ? ring.next(head) : ring.prev(head);
  return head;
}

// Steps from the current rotation of the order-r window at `head` to the
// next rotation that is again a semi-meander. Only the boundary stamp that
// the rotation direction consumes is examined:
//
//   x = first stamp (right rotations) or last stamp (left rotations)
//   x == 1 and r even        -> 1
//   x and r of equal parity  -> distance to stamp x+1
//   otherwise                -> distance to stamp x-1
//
// where distance is measured from the consumed boundary inward. When x is
// already the window maximum the class is exhausted and the returned step
// wraps the window back onto its starting rotation.
template <typename Counters>
int next_steps(const LabelRing& ring, int head, int r, bool right, Counters& ctr) {
  ctr.nsm();
  const int x = right ? ring.label_of(head) : ring.label_of(ring.prev(head));
  if (x == 1 && r % 2 == 0) return 1;
  if (x == r) return right ? 1 : r;
  const int target = (x % 2 == r % 2) ? x + 1 : x - 1;
  int pos = 1;
  if (right) {
    for (int node = head; ring.label_of(node) != target; node = ring.next(node)) ++pos;
  } else {
    for (int node = ring.prev(head); ring.label_of(node) != target; node = ring.prev(node)) ++pos;
  }
  ctr.scan(static_cast<std::uint64_t>(pos));
  return pos;
}

template <PileSink Sink, typename Counters>
class RecursiveGenerator {
 public:
  RecursiveGenerator(const GenConfig& cfg, Sink& sink, Counters& ctr)
      : n_(cfg.n),
        kind_(cfg.kind),
        ring_(LabelRing::singleton(cfg.n)),
        q_(cfg.n),
        sink_(sink),
        ctr_(ctr) {}

  std::uint64_t run() {
    descend(ring_.node_of(1), 0);
    return emitted_;
  }

 private:
  // Enumerate the level-t rotation class of the order-(t+1) window at
  // `head`, recursing below each member. q_[t] fixes this class's rotation
  // direction; finished deeper levels flip their own sign so that the next
  // sibling continues from where the previous child's listing stopped.
  void descend(int head, int t) {
    const int len = t + 1;
    int i = 1;
    while (i <= len) {
      if (t >= n_ - 1) {
        ++emitted_;
        sink_(PileView(ring_, head, len));
      } else {
        const int child = ring_.insert_before(head, t + 2);
        ctr_.splice_op();
        descend(q_.is_right(t + 1) ? head : child, t + 1);
        q_.flip(t + 1);
        ring_.remove(child);
        ctr_.splice_op();
      }
      int j = 1;
      if (kind_ != GenKind::StampFoldings || t < n_ - 1)
        j = next_steps(ring_, head, len, q_.is_right(t), ctr_);
      head = rotate_head(ring_, head, j, q_.is_right(t), len, ctr_);
      i += j;
    }
  }

  int n_;
  GenKind kind_;
  LabelRing ring_;
  SignArray q_;
  Sink& sink_;
  Counters& ctr_;
  std::uint64_t emitted_ = 0;
};

}  // namespace detail

// Pull-style engine: each next() advances to the following string of the
// listing. This is the iterative algorithm in its natural shape; the push
// wrapper gen_iterative() below drives it.
template <typename Counters = NoCounters>
class IterativeCursor {
 public:
  IterativeCursor(const GenConfig& cfg, Counters& ctr)
      : n_(cfg.n),
        kind_(cfg.kind),
        ring_(LabelRing::identity(cfg.n)),
        q_(cfg.n),
        p_(ring_.node_of(1)),
        ctr_(ctr) {
    detail::validate(cfg);
  }

  explicit IterativeCursor(const GenConfig& cfg)
    requires std::same_as<Counters, NoCounters>
      : IterativeCursor(cfg, no_counters()) {}

  // Advances to the next string; false once the listing is exhausted.
  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      return true;
    }
    if (class_left_ > 0) {
      // Remaining strings of a stamp-folding leaf class: each is one simple
      // rotation away, no rescan needed until the class closes.
      --class_left_;
      p_ = detail::rotate_head(ring_, p_, 1, q_.is_right(n_ - 1), n_, ctr_);
      return true;
    }
    const int t = scan_break_level();
    if (t < 0) {
      done_ = true;
      return false;
    }
    const bool right = q_.is_right(t);
    if (t == n_ - 1) {
      int j = 1;
      if (kind_ == GenKind::StampFoldings)
        class_left_ = n_ - 2;
      else
        j = detail::next_steps(ring_, p_, n_, right, ctr_);
      p_ = detail::rotate_head(ring_, p_, j, right, n_, ctr_);
      return true;
    }
    // Deepest unfinished level lies inside the string: rotate the order-
    // (t+1) window in place. The window never wraps, so it can be closed
    // into a private cycle, rotated, and spliced back.
    const int before = ring_.prev(head_);
    const int after = ring_.next(tail_);
    ring_.close_cycle(head_, tail_);
    ctr_.splice_op();
    const int len = t + 1;
    const int j = detail::next_steps(ring_, head_, len, right, ctr_);
    const int new_head = detail::rotate_head(ring_, head_, j, right, len, ctr_);
    if (p_ == head_) p_ = new_head;  // window was a prefix of the string
    ring_.splice(before, new_head, after);
    ctr_.splice_op();
    return true;
  }

  // Valid after next() returned true, until the cursor moves again.
  PileView current() const { return PileView(ring_, p_, n_); }

 private:
  // Walk levels n-1 down to 0. A level whose boundary stamp is its window
  // maximum has finished its rotation class: flip its sign, shrink the
  // window past the maximum and continue. Returns the first unfinished
  // level, or -1 when the scan falls through level 0 (listing complete).
  int scan_break_level() {
    head_ = p_;
    tail_ = ring_.prev(p_);
    int t = n_ - 1;
    for (; t >= 0; --t) {
      ctr_.scan();
      if (q_.is_right(t) && ring_.label_of(head_) == t + 1) {
        q_.flip(t);
        head_ = ring_.next(head_);
      } else if (!q_.is_right(t) && ring_.label_of(tail_) == t + 1) {
        q_.flip(t);
        tail_ = ring_.prev(tail_);
      } else {
        break;
      }
    }
    return t;
  }

  int n_;
  GenKind kind_;
  LabelRing ring_;
  SignArray q_;
  int p_;
  int head_ = 0;
  int tail_ = 0;
  int class_left_ = 0;
  bool started_ = false;
  bool done_ = false;
  Counters& ctr_;
};

template <PileSink Sink, typename Counters>
std::uint64_t gen_recursive(const GenConfig& cfg, Sink&& sink, Counters& ctr) {
  detail::validate(cfg);
  detail::RecursiveGenerator<std::remove_reference_t<Sink>, Counters> gen(cfg, sink, ctr);
  return gen.run();
}

template <PileSink Sink>
std::uint64_t gen_recursive(const GenConfig& cfg, Sink&& sink) {
  return gen_recursive(cfg, sink, no_counters());
}

template <PileSink Sink, typename Counters>
std::uint64_t gen_iterative(const GenConfig& cfg, Sink&& sink, Counters& ctr) {
  IterativeCursor<Counters> cursor(cfg, ctr);
  std::uint64_t emitted = 0;
  while (cursor.next()) {
    ++emitted;
    sink(cursor.current());
  }
  return emitted;
}

template <PileSink Sink>
std::uint64_t gen_iterative(const GenConfig& cfg, Sink&& sink) {
  return gen_iterative(cfg, sink, no_counters());
}

// Listings get big fast (the order-12 stamp listing already holds ~147k
// strings); past this bound materialization throws and callers must stream.
inline constexpr int kListingMaterializeBound = 12;

Listing listing_recursive(const GenConfig& cfg, int max_n = kListingMaterializeBound);
Listing listing_iterative(const GenConfig& cfg, int max_n = kListingMaterializeBound);

// Steps from the order-r prefix window of p to its next rotation that is a
// semi-meander; right == true rotates right (first stamp consumed), false
// rotates left. See detail::next_steps for the parity rule.
int next_semi_meander_steps(const Pile& p, int r, bool right);

}  // namespace foldgray

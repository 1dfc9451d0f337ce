#pragma once
// Circular doubly-linked list used by the generators. The node for stamp
// label v lives in slot v-1 of a fixed arena, so locating a label is O(1)
// and nothing is allocated after construction. A rotation is just a head
// move; links only change on insert, remove and window splicing.

#include <cassert>
#include <span>
#include <vector>

#include "foldgray/pile.hpp"

namespace foldgray {

class LabelRing {
 public:
  // Arena sized for labels 1..capacity, initially holding only label 1.
  static LabelRing singleton(int capacity) {
    LabelRing r(capacity);
    r.nodes_[0] = Node{0, 0};
    return r;
  }

  // Ring holding 1..n linked in identity order.
  static LabelRing identity(int n) {
    LabelRing r(n);
    for (int v = 0; v < n; ++v) {
      r.nodes_[static_cast<std::size_t>(v)].next = (v + 1) % n;
      r.nodes_[static_cast<std::size_t>(v)].prev = (v + n - 1) % n;
    }
    return r;
  }

  // Ring over an arbitrary permutation of 1..len, linked in the given order.
  static LabelRing from_labels(std::span<const int> labels) {
    assert(is_permutation_1_to_n(labels));
    const int len = static_cast<int>(labels.size());
    LabelRing r(len);
    for (int s = 0; s < len; ++s) {
      const int node = labels[static_cast<std::size_t>(s)] - 1;
      const int succ = labels[static_cast<std::size_t>((s + 1) % len)] - 1;
      r.nodes_[static_cast<std::size_t>(node)].next = succ;
      r.nodes_[static_cast<std::size_t>(succ)].prev = node;
    }
    return r;
  }

  int capacity() const { return static_cast<int>(nodes_.size()); }
  int node_of(int label) const { return label - 1; }
  int label_of(int node) const { return node + 1; }
  int next(int node) const { return nodes_[static_cast<std::size_t>(node)].next; }
  int prev(int node) const { return nodes_[static_cast<std::size_t>(node)].prev; }

  // Insert label as the predecessor of `at`; reading the ring from `at`, the
  // new node becomes the last element. Returns the new node.
  int insert_before(int at, int label) {
    const int node = label - 1;
    const int before = prev(at);
    nodes_[static_cast<std::size_t>(node)] = Node{before, at};
    nodes_[static_cast<std::size_t>(before)].next = node;
    nodes_[static_cast<std::size_t>(at)].prev = node;
    return node;
  }

  // Unlink node; its own links are left stale and must not be read again
  // until it is reinserted.
  void remove(int node) {
    const int before = prev(node);
    const int after = next(node);
    nodes_[static_cast<std::size_t>(before)].next = after;
    nodes_[static_cast<std::size_t>(after)].prev = before;
  }

  // Close the segment head..tail into its own cycle, detaching it from the
  // remainder. The outside neighbours keep their stale links into the
  // segment; splice() repairs everything.
  void close_cycle(int head, int tail) {
    nodes_[static_cast<std::size_t>(head)].prev = tail;
    nodes_[static_cast<std::size_t>(tail)].next = head;
  }

  // Reconnect a detached cycle, entered at new_head, between before and
  // after (which must be adjacent remnants of the enclosing ring).
  void splice(int before, int new_head, int after) {
    const int new_tail = prev(new_head);
    nodes_[static_cast<std::size_t>(before)].next = new_head;
    nodes_[static_cast<std::size_t>(new_head)].prev = before;
    nodes_[static_cast<std::size_t>(new_tail)].next = after;
    nodes_[static_cast<std::size_t>(after)].prev = new_tail;
  }

 private:
  struct Node {
    int prev = 0;
    int next = 0;
  };

  explicit LabelRing(int capacity) : nodes_(static_cast<std::size_t>(capacity)) {
    assert(capacity >= 1);
  }

  std::vector<Node> nodes_;
};

// Read-only view of `order` labels starting at a head node. This is what
// generator sinks receive; it is valid only during the callback, since the
// generator will move on and relink afterwards.
class PileView {
 public:
  PileView(const LabelRing& ring, int head, int order)
      : ring_(&ring), head_(head), order_(order) {}

  int order() const { return order_; }
  int first_label() const { return ring_->label_of(head_); }

  void copy_labels(std::span<int> out) const {
    assert(static_cast<int>(out.size()) >= order_);
    int node = head_;
    for (int s = 0; s < order_; ++s) {
      out[static_cast<std::size_t>(s)] = ring_->label_of(node);
      node = ring_->next(node);
    }
  }

  Pile to_pile() const {
    std::vector<int> labels(static_cast<std::size_t>(order_));
    copy_labels(labels);
    return Pile(std::move(labels));
  }

  bool equals(const Pile& p) const {
    if (p.order() != order_) return false;
    int node = head_;
    for (int s = 1; s <= order_; ++s) {
      if (p.at(s) != ring_->label_of(node)) return false;
      node = ring_->next(node);
    }
    return true;
  }

  void append_plain(std::string& out) const {
    int node = head_;
    for (int s = 0; s < order_; ++s) {
      if (s > 0) out += ' ';
      out += std::to_string(ring_->label_of(node));
      node = ring_->next(node);
    }
  }

  void append_compact(std::string& out) const {
    assert(order_ <= 9);
    int node = head_;
    for (int s = 0; s < order_; ++s) {
      out += static_cast<char>('0' + ring_->label_of(node));
      node = ring_->next(node);
    }
  }

  void append_json(std::string& out) const {
    out += '[';
    int node = head_;
    for (int s = 0; s < order_; ++s) {
      if (s > 0) out += ',';
      out += std::to_string(ring_->label_of(node));
      node = ring_->next(node);
    }
    out += ']';
  }

 private:
  const LabelRing* ring_;
  int head_;
  int order_;
};

}  // namespace foldgray

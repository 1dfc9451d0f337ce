#include "foldgray/generate.hpp"

#include <stdexcept>

namespace foldgray {

namespace {

Listing materialize(const GenConfig& cfg, int max_n, bool recursive) {
  detail::validate(cfg);
  if (cfg.n > max_n)
    throw std::length_error("listing: order exceeds the materialization bound, stream instead");
  Listing out;
  auto sink = [&out](const PileView& v) { out.push_back(v.to_pile()); };
  if (recursive)
    gen_recursive(cfg, sink);
  else
    gen_iterative(cfg, sink);
  return out;
}

}  // namespace

Listing listing_recursive(const GenConfig& cfg, int max_n) {
  return materialize(cfg, max_n, true);
}

Listing listing_iterative(const GenConfig& cfg, int max_n) {
  return materialize(cfg, max_n, false);
}

int next_semi_meander_steps(const Pile& p, int r, bool right) {
  if (r < 1 || r > p.order())
    throw std::invalid_argument("next_semi_meander_steps: window length out of range");
  const std::span<const int> window = p.labels().subspan(0, static_cast<std::size_t>(r));
  if (!is_permutation_1_to_n(window))
    throw std::invalid_argument("next_semi_meander_steps: prefix is not a window of 1..r");
  const LabelRing ring = LabelRing::from_labels(window);
  return detail::next_steps(ring, ring.node_of(window[0]), r, right, no_counters());
}

}  // namespace foldgray

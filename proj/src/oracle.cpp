#include "foldgray/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace foldgray {

namespace {

// Strict interleaving: exactly one endpoint of the second arc lies strictly
// inside the first. Same-side arcs never share an endpoint (their stamp
// pairs are disjoint), which keeps this test simple.
bool arcs_cross(const Arc& x, const Arc& y) {
  const bool c_in = x.a < y.a && y.a < x.b;
  const bool d_in = x.a < y.b && y.b < x.b;
  return c_in != d_in;
}

// True if some arc on the given side strictly spans the position, blocking
// the stamp there from being seen from that side.
bool covered(const ArcDiagram& d, ArcSide side, int pos) {
  for (const Arc& arc : d.arcs)
    if (arc.side == side && arc.a < pos && pos < arc.b) return true;
  return false;
}

bool has_same_side_crossing(const ArcDiagram& d) {
  const std::size_t m = d.arcs.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      if (d.arcs[x].side != d.arcs[y].side) continue;
      if (arcs_cross(d.arcs[x], d.arcs[y])) return true;
    }
  return false;
}

}  // namespace

ArcDiagram arc_diagram(const Pile& p) {
  const int n = p.order();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) pos[static_cast<std::size_t>(p.at(s))] = s;

  ArcDiagram d;
  d.order = n;
  d.arcs.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int s = 1; s < n; ++s) {
    const int u = pos[static_cast<std::size_t>(s)];
    const int v = pos[static_cast<std::size_t>(s + 1)];
    d.arcs.push_back(Arc{std::min(u, v), std::max(u, v),
                         s % 2 == 1 ? ArcSide::Below : ArcSide::Above});
  }
  return d;
}

bool is_stamp_folding(const Pile& p) {
  return !has_same_side_crossing(arc_diagram(p));
}

bool is_semi_meander(const Pile& p) {
  const ArcDiagram d = arc_diagram(p);
  if (has_same_side_crossing(d)) return false;
  const int n = p.order();
  const ArcSide open_side = n % 2 == 0 ? ArcSide::Above : ArcSide::Below;
  return !covered(d, open_side, index_of(n, p));
}

bool is_open_meander(const Pile& p) {
  const ArcDiagram d = arc_diagram(p);
  if (has_same_side_crossing(d)) return false;
  const int n = p.order();
  const ArcSide open_side = n % 2 == 0 ? ArcSide::Above : ArcSide::Below;
  if (covered(d, open_side, index_of(n, p))) return false;
  return !covered(d, ArcSide::Above, index_of(1, p));
}

bool satisfies(const Pile& p, FoldKind kind) {
  switch (kind) {
    case FoldKind::StampFolding: return is_stamp_folding(p);
    case FoldKind::SemiMeander: return is_semi_meander(p);
    case FoldKind::OpenMeander: return is_open_meander(p);
  }
  return false;
}

std::vector<Pile> brute_force_enumerate(int n, FoldKind kind, int max_n) {
  if (n < 1) throw std::invalid_argument("brute_force_enumerate: order must be at least 1");
  if (n > max_n)
    throw std::length_error("brute_force_enumerate: order exceeds the brute-force bound");
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Pile> out;
  do {
    Pile p(labels);
    if (satisfies(p, kind)) out.push_back(std::move(p));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace foldgray

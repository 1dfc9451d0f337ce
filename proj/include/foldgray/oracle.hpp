#pragma once
// Brute-force ground truth. A pile is checked by drawing its perforation
// arcs and testing for crossings and for visibility of the end stamps.
// Everything here is O(n^2) per pile and exists to validate the generators,
// never to enumerate at scale.

#include <cstdint>
#include <vector>

#include "foldgray/pile.hpp"

namespace foldgray {

enum class FoldKind { StampFolding, SemiMeander, OpenMeander };

enum class ArcSide : std::uint8_t { Below, Above };

// Arc joining the positions of stamps s and s+1, drawn below the pile for
// odd s and above for even s (stamp 1 is glued to 2 at the bottom edge).
struct Arc {
  int a = 0;  // endpoint positions, a < b
  int b = 0;
  ArcSide side = ArcSide::Below;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  int order = 0;
  std::vector<Arc> arcs;  // arcs[s-1] joins stamps s and s+1
};

ArcDiagram arc_diagram(const Pile& p);

// No two arcs on the same side cross.
bool is_stamp_folding(const Pile& p);

// Stamp folding whose last stamp n is visible on the open side of the
// strip end (above for even n, below for odd n).
bool is_semi_meander(const Pile& p);

// Semi-meander whose first stamp is also visible from above, so the strip
// unrolls into an open meander across a horizontal line.
bool is_open_meander(const Pile& p);

bool satisfies(const Pile& p, FoldKind kind);

inline constexpr int kDefaultOracleBound = 10;

// All piles of order n of the given kind, in lexicographic order. Throws
// std::length_error when n exceeds max_n; factorial scanning beyond the
// default bound is a programming mistake, not a use case.
std::vector<Pile> brute_force_enumerate(int n, FoldKind kind, int max_n = kDefaultOracleBound);

}  // namespace foldgray

#pragma once
// Independent checking of generated listings. Deliberately dumb: adjacency
// witnesses are found by scanning all legal block moves, validity comes from
// the arc-diagram oracle, and completeness is checked against brute-force
// enumeration while the order permits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foldgray/generate.hpp"
#include "foldgray/pile.hpp"

namespace foldgray {

struct VerifyOptions {
  // Orders up to this bound are cross-checked for exhaustiveness against
  // brute_force_enumerate; larger listings get the structural checks only.
  int oracle_bound = 8;
};

struct WitnessFailure {
  std::uint64_t index = 0;   // position in the listing where the check failed
  std::vector<Pile> pair;    // the pile(s) involved
  std::string reason;
};

struct VerifyReport {
  int n = 0;
  GenKind kind = GenKind::StampFoldings;
  std::uint64_t count = 0;
  bool all_valid = false;
  bool all_adjacent = false;
  bool cyclic = false;
  bool first_last_ok = false;
  std::vector<WitnessFailure> witness_failures;

  bool all_ok() const {
    return all_valid && all_adjacent && cyclic && first_last_ok && witness_failures.empty();
  }
};

// Smallest (k, then i, then j) block move with apply_rotation(a,{i,j,k}) == b,
// or nullopt when none exists (in particular for a == b). Orders must match.
std::optional<StampRotation> find_stamp_rotation(const Pile& a, const Pile& b);

// Checks a listing of the given kind: every entry valid, consecutive entries
// one rotation apart, wraparound included, first/last strings in canonical
// position, and (within opts.oracle_bound) exactly the full object set.
// Throws std::invalid_argument for an empty or mixed-order listing.
VerifyReport verify_listing(const Listing& listing, GenKind kind, const VerifyOptions& opts = {});

std::string report_to_json(const VerifyReport& report);

}  // namespace foldgray

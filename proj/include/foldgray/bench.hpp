#pragma once
// Throughput and operation-count measurements for both generators. Strings
// are consumed by a counting sink, never materialized, so the numbers track
// the generators themselves rather than allocator traffic.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "foldgray/generate.hpp"

namespace foldgray {

enum class Algorithm { Recursive, Iterative };

struct BenchRecord {
  int n = 0;
  GenKind kind = GenKind::StampFoldings;
  Algorithm algorithm = Algorithm::Iterative;
  std::uint64_t count = 0;
  std::uint64_t wall_ns = 0;  // median over the repetitions
  double ns_per_string = 0.0;
  GenCounters ops;  // identical across repetitions; captured once
};

// One record per order in [n_min, n_max]. repetitions >= 1; the median wall
// time is kept to shrug off scheduler noise.
std::vector<BenchRecord> run_bench(int n_min, int n_max, GenKind kind, Algorithm algorithm,
                                   int repetitions = 3);

// Header plus one row per record:
// n,kind,algorithm,count,wall_ns,ns_per_string,rotations,scans,splices,nsm_calls
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

// Operation counters for a single full run, without timing.
GenCounters count_ops(int n, GenKind kind, Algorithm algorithm);

// Largest operation count charged to a single emitted string, the final
// descent included. Bounds the worst-case work per string.
std::uint64_t max_ops_per_emission(int n, GenKind kind, Algorithm algorithm);

}  // namespace foldgray

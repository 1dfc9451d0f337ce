#include "foldgray/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

namespace foldgray {

namespace {

const char* kind_name(GenKind kind) {
  return kind == GenKind::StampFoldings ? "stamp" : "semi";
}

const char* algorithm_name(Algorithm a) {
  return a == Algorithm::Recursive ? "recursive" : "iterative";
}

template <typename Sink, typename Counters>
std::uint64_t run(Algorithm algorithm, const GenConfig& cfg, Sink&& sink, Counters& ctr) {
  return algorithm == Algorithm::Recursive ? gen_recursive(cfg, sink, ctr)
                                           : gen_iterative(cfg, sink, ctr);
}

}  // namespace

std::vector<BenchRecord> run_bench(int n_min, int n_max, GenKind kind, Algorithm algorithm,
                                   int repetitions) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("run_bench: bad order range");
  if (repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be positive");

  std::vector<BenchRecord> records;
  for (int n = n_min; n <= n_max; ++n) {
    const GenConfig cfg{n, kind};
    BenchRecord rec;
    rec.n = n;
    rec.kind = kind;
    rec.algorithm = algorithm;
    rec.ops = count_ops(n, kind, algorithm);

    std::vector<std::uint64_t> walls;
    walls.reserve(static_cast<std::size_t>(repetitions));
    // The sink reads the head label so emissions stay observable work.
    volatile int witness = 0;
    auto sink = [&witness](const PileView& v) { witness = v.first_label(); };
    for (int rep = 0; rep < repetitions; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      rec.count = run(algorithm, cfg, sink, no_counters());
      const auto t1 = std::chrono::steady_clock::now();
      walls.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    std::sort(walls.begin(), walls.end());
    rec.wall_ns = walls[walls.size() / 2];
    rec.ns_per_string = rec.count ? static_cast<double>(rec.wall_ns) / static_cast<double>(rec.count) : 0.0;
    records.push_back(rec);
  }
  return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "n,kind,algorithm,count,wall_ns,ns_per_string,rotations,scans,splices,nsm_calls\n";
  for (const BenchRecord& r : records) {
    os << r.n << ',' << kind_name(r.kind) << ',' << algorithm_name(r.algorithm) << ',' << r.count
       << ',' << r.wall_ns << ',' << r.ns_per_string << ',' << r.ops.rotations << ','
       << r.ops.scans << ',' << r.ops.splices << ',' << r.ops.nsm_calls << '\n';
  }
}

GenCounters count_ops(int n, GenKind kind, Algorithm algorithm) {
  GenCounters ctr;
  auto sink = [](const PileView&) {};
  run(algorithm, GenConfig{n, kind}, sink, ctr);
  return ctr;
}

std::uint64_t max_ops_per_emission(int n, GenKind kind, Algorithm algorithm) {
  GenCounters ctr;
  std::uint64_t last_total = 0;
  std::uint64_t max_delta = 0;
  auto sink = [&](const PileView&) {
    const std::uint64_t total = ctr.total();
    max_delta = std::max(max_delta, total - last_total);
    last_total = total;
  };
  run(algorithm, GenConfig{n, kind}, sink, ctr);
  // The teardown scan after the last string is real work; charge it too.
  max_delta = std::max(max_delta, ctr.total() - last_total);
  return max_delta;
}

}  // namespace foldgray

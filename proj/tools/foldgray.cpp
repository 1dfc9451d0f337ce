// Command line front end for the fold/meander Gray-code toolkit.
//
//   generate         stream a rotation Gray-code listing (stamp or semi)
//   enumerate-brute  brute-force listing of stamp/semi/open strings
//   classify         test one pile against all three predicates
//   filter           keep the rows of a listing that satisfy a predicate
//   verify           check a listing and emit a json report
//   bench            CSV throughput and operation-count measurements
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors.

#include <cstdlib>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "foldgray/bench.hpp"
#include "foldgray/generate.hpp"
#include "foldgray/listing_io.hpp"
#include "foldgray/oracle.hpp"
#include "foldgray/verify.hpp"

namespace {

using namespace foldgray;

GenKind gen_kind(const std::string& kind) {
  return kind == "stamp" ? GenKind::StampFoldings : GenKind::SemiMeanders;
}

FoldKind fold_kind(const std::string& kind) {
  if (kind == "stamp") return FoldKind::StampFolding;
  if (kind == "semi") return FoldKind::SemiMeander;
  return FoldKind::OpenMeander;
}

int oracle_bound_from_env() {
  const char* raw = std::getenv("FOLDGRAY_ORACLE_MAX_N");
  if (raw == nullptr) return kDefaultOracleBound;
  int value = 0;
  const char* end = raw + std::string_view(raw).size();
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 1) {
    std::cerr << "foldgray: ignoring unparseable FOLDGRAY_ORACLE_MAX_N\n";
    return kDefaultOracleBound;
  }
  return value;
}

// Output selection shared by the listing-producing subcommands.
class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_listing(std::ostream& os, const Listing& listing, const std::string& format,
                   const ListingDocument& doc) {
  if (format == "plain")
    write_plain(os, listing);
  else if (format == "compact")
    write_compact(os, listing);
  else
    write_json(os, doc);
}

Listing read_listing_or_die(const std::string& path) {
  if (path.empty() || path == "-") return read_listing(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return read_listing(in);
}

struct GenerateArgs {
  int n = 0;
  std::string kind;
  std::string algo = "iterative";
  std::string format = "plain";
  bool count_only = false;
  bool verify = false;
  std::string output;
};

template <PileSink Sink>
std::uint64_t run_generator(const GenConfig& cfg, const std::string& algo, Sink&& sink) {
  return algo == "recursive" ? gen_recursive(cfg, sink) : gen_iterative(cfg, sink);
}

std::uint64_t stream_listing(std::ostream& os, const GenConfig& cfg, const GenerateArgs& args) {
  std::string buf;
  buf.reserve(1 << 16);
  std::uint64_t count = 0;
  if (args.format == "json") {
    buf += "{\n  \"n\": " + std::to_string(cfg.n) + ",\n  \"kind\": \"" + args.kind +
           "\",\n  \"algorithm\": \"" + args.algo + "\",\n  \"listing\": [";
    count = run_generator(cfg, args.algo, [&](const PileView& v) {
      buf += count == 0 ? "\n    " : ",\n    ";
      ++count;
      v.append_json(buf);
      if (buf.size() > (1 << 15)) {
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    });
    buf += "\n  ]\n}\n";
  } else {
    const bool compact = args.format == "compact";
    count = run_generator(cfg, args.algo, [&](const PileView& v) {
      if (compact)
        v.append_compact(buf);
      else
        v.append_plain(buf);
      buf += '\n';
      if (buf.size() > (1 << 15)) {
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    });
  }
  os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  os.flush();
  return count;
}

int run_generate(const GenerateArgs& args) {
  if (args.format == "compact" && args.n > 9) {
    std::cerr << "foldgray: compact format is only defined for n <= 9\n";
    return 2;
  }
  const GenConfig cfg{args.n, gen_kind(args.kind)};
  OutputFile out(args.output);

  Listing listing;
  if (args.verify) {
    // Verification needs the whole listing in memory; the materialization
    // bound applies and large orders must be verified offline in pieces.
    listing =
        args.algo == "recursive" ? listing_recursive(cfg) : listing_iterative(cfg);
  }

  if (args.count_only) {
    std::uint64_t count = listing.empty()
                              ? run_generator(cfg, args.algo, [](const PileView&) {})
                              : listing.size();
    out.stream() << count << '\n';
  } else if (args.verify) {
    write_listing(out.stream(), listing, args.format,
                  {cfg.n, args.kind, args.algo, listing});
  } else {
    stream_listing(out.stream(), cfg, args);
  }

  if (args.verify) {
    const VerifyReport report = verify_listing(listing, cfg.kind);
    if (!report.all_ok()) {
      std::cerr << report_to_json(report) << '\n';
      return 1;
    }
  }
  return 0;
}

int run_enumerate_brute(int n, const std::string& kind, const std::string& format,
                        const std::string& output) {
  const int bound = oracle_bound_from_env();
  if (n > bound) {
    std::cerr << "foldgray: n exceeds the brute-force bound of " << bound
              << " (override with FOLDGRAY_ORACLE_MAX_N)\n";
    return 2;
  }
  const Listing listing = brute_force_enumerate(n, fold_kind(kind), bound);
  OutputFile out(output);
  write_listing(out.stream(), listing, format, {n, kind, "brute-force", listing});
  std::cerr << listing.size() << " " << kind << " strings of order " << n << '\n';
  return 0;
}

int run_classify(const std::vector<std::string>& tokens) {
  std::string text;
  for (const std::string& tok : tokens) {
    if (!text.empty()) text += ' ';
    text += tok;
  }
  const std::optional<Pile> p = Pile::parse(text);
  if (!p) {
    std::cerr << "foldgray: not a pile: " << text << '\n';
    return 2;
  }
  const bool stamp = is_stamp_folding(*p);
  const bool semi = stamp && is_semi_meander(*p);
  const bool open = semi && is_open_meander(*p);
  std::cout << "stamp=" << (stamp ? "true" : "false") << " semi=" << (semi ? "true" : "false")
            << " open=" << (open ? "true" : "false") << '\n';
  return 0;
}

int run_filter(const std::string& kind, const std::string& input, const std::string& format,
               const std::string& output) {
  const Listing all = read_listing_or_die(input);
  Listing kept;
  for (const Pile& p : all)
    if (satisfies(p, fold_kind(kind))) kept.push_back(p);
  OutputFile out(output);
  const int n = kept.empty() ? (all.empty() ? 0 : all.front().order()) : kept.front().order();
  write_listing(out.stream(), kept, format, {n, kind, "filter", kept});
  return 0;
}

int run_verify(const std::string& kind, const std::string& input, const std::string& report_path,
               int oracle_bound) {
  const Listing listing = read_listing_or_die(input);
  const VerifyReport report = verify_listing(listing, gen_kind(kind), {oracle_bound});
  OutputFile out(report_path);
  out.stream() << report_to_json(report) << '\n';
  return report.all_ok() ? 0 : 1;
}

int run_bench_cmd(int n_min, int n_max, const std::string& kind, const std::string& algo,
                  int reps, const std::string& output) {
  std::vector<BenchRecord> records;
  if (algo == "recursive" || algo == "both") {
    auto part = run_bench(n_min, n_max, gen_kind(kind), Algorithm::Recursive, reps);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (algo == "iterative" || algo == "both") {
    auto part = run_bench(n_min, n_max, gen_kind(kind), Algorithm::Iterative, reps);
    records.insert(records.end(), part.begin(), part.end());
  }
  OutputFile out(output);
  write_csv(out.stream(), records);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"rotation Gray codes for stamp foldings and semi-meanders"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "stream a Gray-code listing");
  generate->add_option("--n", gen.n, "number of stamps")->required()->check(CLI::PositiveNumber);
  generate->add_option("--kind", gen.kind, "stamp | semi")
      ->required()
      ->check(CLI::IsMember({"stamp", "semi"}));
  generate->add_option("--algo", gen.algo, "recursive | iterative")
      ->check(CLI::IsMember({"recursive", "iterative"}));
  generate->add_option("--format", gen.format, "plain | compact | json")
      ->check(CLI::IsMember({"plain", "compact", "json"}));
  generate->add_flag("--count-only", gen.count_only, "print only the number of strings");
  generate->add_flag("--verify", gen.verify, "check the listing before exiting");
  generate->add_option("--output", gen.output, "write to a file instead of stdout");

  int brute_n = 0;
  std::string brute_kind, brute_format = "plain", brute_output;
  CLI::App* brute = app.add_subcommand("enumerate-brute", "brute-force listing by predicate");
  brute->add_option("--n", brute_n, "number of stamps")->required()->check(CLI::PositiveNumber);
  brute->add_option("--kind", brute_kind, "stamp | semi | open")
      ->required()
      ->check(CLI::IsMember({"stamp", "semi", "open"}));
  brute->add_option("--format", brute_format, "plain | compact | json")
      ->check(CLI::IsMember({"plain", "compact", "json"}));
  brute->add_option("--output", brute_output, "write to a file instead of stdout");

  std::vector<std::string> classify_tokens;
  CLI::App* classify = app.add_subcommand("classify", "test one pile against the predicates");
  classify->add_option("pile", classify_tokens, "pile, compact or space-separated")->required();

  std::string filter_kind, filter_input, filter_format = "plain", filter_output;
  CLI::App* filter = app.add_subcommand("filter", "keep listing rows satisfying a predicate");
  filter->add_option("--kind", filter_kind, "stamp | semi | open")
      ->required()
      ->check(CLI::IsMember({"stamp", "semi", "open"}));
  filter->add_option("input", filter_input, "listing file (default: stdin)");
  filter->add_option("--format", filter_format, "plain | compact | json")
      ->check(CLI::IsMember({"plain", "compact", "json"}));
  filter->add_option("--output", filter_output, "write to a file instead of stdout");

  std::string verify_kind, verify_input, verify_report;
  int verify_bound = 8;
  CLI::App* verify = app.add_subcommand("verify", "check a listing and emit a json report");
  verify->add_option("--kind", verify_kind, "stamp | semi")
      ->required()
      ->check(CLI::IsMember({"stamp", "semi"}));
  verify->add_option("input", verify_input, "listing file (default: stdin)");
  verify->add_option("--report", verify_report, "write the report to a file");
  verify->add_option("--oracle-bound", verify_bound,
                     "max order for the exhaustiveness cross-check")
      ->check(CLI::PositiveNumber);

  int bench_min = 0, bench_max = 0, bench_reps = 3;
  std::string bench_kind, bench_algo = "both", bench_output;
  CLI::App* bench = app.add_subcommand("bench", "measure generator throughput");
  bench->add_option("--n-min", bench_min, "smallest order")->required()->check(CLI::PositiveNumber);
  bench->add_option("--n-max", bench_max, "largest order")->required()->check(CLI::PositiveNumber);
  bench->add_option("--kind", bench_kind, "stamp | semi")
      ->required()
      ->check(CLI::IsMember({"stamp", "semi"}));
  bench->add_option("--algo", bench_algo, "recursive | iterative | both")
      ->check(CLI::IsMember({"recursive", "iterative", "both"}));
  bench->add_option("--reps", bench_reps, "timing repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--output", bench_output, "write the csv to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (brute->parsed()) return run_enumerate_brute(brute_n, brute_kind, brute_format, brute_output);
    if (classify->parsed()) return run_classify(classify_tokens);
    if (filter->parsed()) return run_filter(filter_kind, filter_input, filter_format, filter_output);
    if (verify->parsed()) return run_verify(verify_kind, verify_input, verify_report, verify_bound);
    if (bench->parsed())
      return run_bench_cmd(bench_min, bench_max, bench_kind, bench_algo, bench_reps, bench_output);
  } catch (const std::exception& e) {
    std::cerr << "foldgray: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

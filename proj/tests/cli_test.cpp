// End-to-end runs of the installed binary through a shell. The binary path
// comes in through FOLDGRAY_CLI_PATH at compile time.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "foldgray/listing_io.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace foldgray;

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is dropped.
CmdResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + FOLDGRAY_CLI_PATH + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("foldgray_test_" + name);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  REQUIRE(os.good());
  os << content;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("cli: count-only generation") {
  const CmdResult res = run_cli("generate --n 5 --kind stamp --count-only");
  CHECK(res.status == 0);
  CHECK(res.out == "50\n");

  const CmdResult semi = run_cli("generate --n 8 --kind semi --algo recursive --count-only");
  CHECK(semi.status == 0);
  CHECK(semi.out == "504\n");
}

TEST_CASE("cli: plain listings stream in order") {
  const CmdResult res = run_cli("generate --n 4 --kind semi --algo recursive");
  CHECK(res.status == 0);
  CHECK(count_lines(res.out) == 10);
  CHECK(res.out.substr(0, 8) == "1 2 3 4\n");
  CHECK(res.out.substr(res.out.size() - 8) == "2 1 3 4\n");

  // Both engines print the same bytes.
  const CmdResult iter = run_cli("generate --n 4 --kind semi --algo iterative");
  CHECK(iter.out == res.out);
}

TEST_CASE("cli: single string order") {
  const CmdResult res = run_cli("generate --n 1 --kind semi");
  CHECK(res.status == 0);
  CHECK(res.out == "1\n");
}

TEST_CASE("cli: compact format is fenced at nine stamps") {
  const CmdResult ok = run_cli("generate --n 9 --kind semi --count-only --format compact");
  CHECK(ok.status == 0);
  const CmdResult bad = run_cli("generate --n 10 --kind stamp --format compact");
  CHECK(bad.status == 2);
}

TEST_CASE("cli: open strings come from the filter, not the generators") {
  const CmdResult gen = run_cli("generate --n 4 --kind open --count-only");
  CHECK(gen.status == 2);

  const CmdResult brute = run_cli("enumerate-brute --n 4 --kind open");
  CHECK(brute.status == 0);
  CHECK(brute.out == "1 2 3 4\n1 4 3 2\n2 3 4 1\n3 2 1 4\n4 1 2 3\n4 3 2 1\n");
}

TEST_CASE("cli: brute-force bound reacts to the environment override") {
  const CmdResult blocked = run_cli("enumerate-brute --n 4 --kind stamp",
                                    "FOLDGRAY_ORACLE_MAX_N=3");
  CHECK(blocked.status == 2);
  const CmdResult allowed = run_cli("enumerate-brute --n 4 --kind stamp",
                                    "FOLDGRAY_ORACLE_MAX_N=4");
  CHECK(allowed.status == 0);
  CHECK(count_lines(allowed.out) == 16);
  const CmdResult deflt = run_cli("enumerate-brute --n 11 --kind stamp");
  CHECK(deflt.status == 2);
}

TEST_CASE("cli: classify") {
  CHECK(run_cli("classify 1423").out == "stamp=false semi=false open=false\n");
  CHECK(run_cli("classify 2143").out == "stamp=true semi=false open=false\n");
  CHECK(run_cli("classify 1 2 3 4").out == "stamp=true semi=true open=true\n");
  CHECK(run_cli("classify 2134").out == "stamp=true semi=true open=false\n");
  CHECK(run_cli("classify 1 2 2").status == 2);
  CHECK(run_cli("classify 10 2 3 4 5 6 7 8 9 1").status == 0);
}

TEST_CASE("cli: filter keeps the round trip byte-identical") {
  const fs::path listing = temp_file("roundtrip.txt");
  const CmdResult gen = run_cli("generate --n 6 --kind semi --output " + listing.string());
  REQUIRE(gen.status == 0);

  std::ifstream in(listing, std::ios::binary);
  std::stringstream raw;
  raw << in.rdbuf();

  // Every semi-meander is a stamp folding, so this is a pure pass-through.
  const CmdResult echoed = run_cli("filter --kind stamp " + listing.string());
  CHECK(echoed.status == 0);
  CHECK(echoed.out == raw.str());

  // Filtering the stamp listing down to semi-meanders matches the dedicated
  // generator, order included.
  const fs::path stamps = temp_file("stamps6.txt");
  REQUIRE(run_cli("generate --n 6 --kind stamp --output " + stamps.string()).status == 0);
  const CmdResult filtered = run_cli("filter --kind semi " + stamps.string());
  const CmdResult direct = run_cli("generate --n 6 --kind semi");
  CHECK(filtered.out == direct.out);

  fs::remove(listing);
  fs::remove(stamps);
}

TEST_CASE("cli: verify pipeline") {
  const fs::path listing = temp_file("verify.txt");
  REQUIRE(run_cli("generate --n 6 --kind semi --output " + listing.string()).status == 0);

  const CmdResult good = run_cli("verify --kind semi " + listing.string());
  CHECK(good.status == 0);
  CHECK(good.out.find("\"all_valid\": true") != std::string::npos);

  // Duplicate the last line: caught by the wraparound and exhaustiveness.
  std::ifstream in(listing, std::ios::binary);
  std::stringstream raw;
  raw << in.rdbuf();
  std::string dup = raw.str();
  dup += "2 1 3 4 5 6\n";
  const fs::path broken = temp_file("verify_broken.txt");
  write_file(broken, dup);
  const CmdResult bad = run_cli("verify --kind semi " + broken.string());
  CHECK(bad.status == 1);

  const fs::path garbage = temp_file("verify_garbage.txt");
  write_file(garbage, "not a listing\n");
  CHECK(run_cli("verify --kind semi " + garbage.string()).status == 2);

  CHECK(run_cli("verify --kind semi " + listing.string() + " < " + listing.string()).status == 0);

  fs::remove(listing);
  fs::remove(broken);
  fs::remove(garbage);
}

TEST_CASE("cli: verify reads stdin when no file is given") {
  const fs::path listing = temp_file("verify_stdin.txt");
  REQUIRE(run_cli("generate --n 5 --kind stamp --output " + listing.string()).status == 0);
  const CmdResult res = run_cli("verify --kind stamp < " + listing.string());
  CHECK(res.status == 0);
  fs::remove(listing);
}

TEST_CASE("cli: inline verification flag") {
  CHECK(run_cli("generate --n 6 --kind semi --algo iterative --verify --count-only").status == 0);
  CHECK(run_cli("generate --n 6 --kind stamp --algo recursive --verify --count-only").status == 0);
}

TEST_CASE("cli: json output parses back") {
  const fs::path path = temp_file("listing.json");
  REQUIRE(run_cli("generate --n 4 --kind semi --format json --output " + path.string()).status ==
          0);
  std::ifstream in(path, std::ios::binary);
  const ListingDocument doc = read_listing_document(in);
  CHECK(doc.n == 4);
  CHECK(doc.kind == "semi");
  CHECK(doc.algorithm == "iterative");
  REQUIRE(doc.listing.size() == 10);
  CHECK(doc.listing.front() == P("1234"));
  CHECK(doc.listing.back() == P("2134"));
  fs::remove(path);
}

TEST_CASE("cli: bench emits csv") {
  const CmdResult res = run_cli("bench --n-min 4 --n-max 5 --kind stamp --algo both --reps 1");
  CHECK(res.status == 0);
  REQUIRE(count_lines(res.out) == 5);
  CHECK(res.out.rfind("n,kind,algorithm,count,wall_ns,ns_per_string,rotations,scans,splices,nsm_calls\n",
                      0) == 0);
  CHECK(res.out.find("4,stamp,recursive,16,") != std::string::npos);
  CHECK(res.out.find("5,stamp,iterative,50,") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run_cli("generate --kind stamp").status == 2);              // missing --n
  CHECK(run_cli("generate --n 4 --kind nonsense").status == 2);     // bad kind
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("").status == 2);                                   // subcommand required
  CHECK(run_cli("--help").status == 0);
}

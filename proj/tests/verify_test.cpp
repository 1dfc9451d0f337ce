#include "foldgray/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "golden_n5.hpp"
#include "test_util.hpp"

using namespace foldgray;

namespace {

// Reference witness search: same tie-break, no shortcuts, rebuilt from the
// block-move definition alone.
std::optional<StampRotation> reference_witness(const Pile& a, const Pile& b) {
  const int n = a.order();
  for (int k = 1; k <= n; ++k)
    for (int i = k + 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (apply_rotation(a, {i, j, k}) == b) return StampRotation{i, j, k};
  return std::nullopt;
}

Pile random_pile(std::mt19937& rng, int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) labels[static_cast<std::size_t>(s)] = s + 1;
  std::shuffle(labels.begin(), labels.end(), rng);
  return Pile(std::move(labels));
}

Listing golden_semis() {
  Listing out;
  for (std::string_view s : kGoldenSemis5) out.push_back(P(s));
  return out;
}

}  // namespace

TEST_CASE("witness search matches the worked examples") {
  CHECK(find_stamp_rotation(P("6345127"), P("6512347")) == StampRotation{4, 6, 2});
  CHECK(find_stamp_rotation(P("1234"), P("1234")) == std::nullopt);
  // Wraparound pair of the order-4 listing.
  CHECK(find_stamp_rotation(P("2134"), P("1234")) == StampRotation{2, 2, 1});
  CHECK_THROWS_AS(find_stamp_rotation(P("123"), P("1234")), std::invalid_argument);
}

TEST_CASE("witness search agrees with the unshortened reference") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Pile a = random_pile(rng, n);
    // Half the trials start from a reachable pair, half from arbitrary ones.
    Pile b = a;
    if (trial % 2 == 0) {
      b = random_pile(rng, n);
    } else {
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      const int i = k + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - k));
      const int j = i + static_cast<int>(rng() % static_cast<unsigned>(n - i + 1));
      b = apply_rotation(a, {i, j, k});
    }
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(find_stamp_rotation(a, b) == reference_witness(a, b));
  }
}

TEST_CASE("a generated listing verifies clean") {
  const VerifyReport report = verify_listing(golden_semis(), GenKind::SemiMeanders);
  CHECK(report.all_ok());
  CHECK(report.n == 5);
  CHECK(report.count == 24);
  CHECK(report.all_valid);
  CHECK(report.all_adjacent);
  CHECK(report.cyclic);
  CHECK(report.first_last_ok);
  CHECK(report.witness_failures.empty());
}

TEST_CASE("the one-string listing is trivially fine") {
  const VerifyReport report = verify_listing({P("1")}, GenKind::StampFoldings);
  CHECK(report.all_ok());
  CHECK(report.cyclic);
}

TEST_CASE("swapped entries break adjacency") {
  Listing listing = golden_semis();
  std::swap(listing[5], listing[6]);
  const VerifyReport report = verify_listing(listing, GenKind::SemiMeanders);
  CHECK_FALSE(report.all_ok());
  CHECK_FALSE(report.all_adjacent);
  CHECK(report.all_valid);  // still the right strings, just misordered
  CHECK_FALSE(report.witness_failures.empty());
}

TEST_CASE("a duplicated entry is caught") {
  Listing listing = golden_semis();
  listing.push_back(listing.back());
  const VerifyReport report = verify_listing(listing, GenKind::SemiMeanders);
  CHECK_FALSE(report.all_ok());
  // The repeated string is its own neighbour, and no block move is the
  // identity; the wraparound pair is still the usual one and stays fine.
  CHECK_FALSE(report.all_adjacent);
  CHECK(report.cyclic);
  CHECK(std::any_of(report.witness_failures.begin(), report.witness_failures.end(),
                    [](const WitnessFailure& f) {
                      return f.reason.find("not exactly the set") != std::string::npos;
                    }));
}

TEST_CASE("a rotated listing keeps adjacency but loses its endpoints") {
  Listing listing = golden_semis();
  std::rotate(listing.begin(), listing.begin() + 1, listing.end());
  const VerifyReport report = verify_listing(listing, GenKind::SemiMeanders);
  CHECK(report.all_adjacent);
  CHECK(report.cyclic);
  CHECK(report.all_valid);
  CHECK_FALSE(report.first_last_ok);
  CHECK_FALSE(report.all_ok());
}

TEST_CASE("an invalid entry is caught") {
  Listing listing = golden_semis();
  listing[3] = P("12453");  // a stamp folding, but not a semi-meander
  const VerifyReport semi_report = verify_listing(listing, GenKind::SemiMeanders);
  CHECK_FALSE(semi_report.all_valid);
  CHECK_FALSE(semi_report.all_ok());

  listing[3] = P("14235");  // below arcs 1-3 and 2-4 cross: not a folding at all
  const VerifyReport stamp_report = verify_listing(listing, GenKind::SemiMeanders);
  CHECK_FALSE(stamp_report.all_valid);
}

TEST_CASE("beyond the oracle bound only structure is checked") {
  // Remove an entry whose neighbours happen to be one move apart themselves:
  // every structural check still passes, and only the exhaustiveness
  // cross-check can notice the hole.
  Listing listing = golden_semis();
  REQUIRE(find_stamp_rotation(listing[0], listing[2]).has_value());
  listing.erase(listing.begin() + 1);

  const VerifyReport strict = verify_listing(listing, GenKind::SemiMeanders, {5});
  CHECK(strict.all_valid);
  CHECK(strict.all_adjacent);
  CHECK(strict.cyclic);
  CHECK(strict.first_last_ok);
  CHECK_FALSE(strict.all_ok());

  const VerifyReport loose = verify_listing(listing, GenKind::SemiMeanders, {4});
  CHECK(loose.all_ok());
}

TEST_CASE("malformed listings are rejected outright") {
  CHECK_THROWS_AS(verify_listing({}, GenKind::StampFoldings), std::invalid_argument);
  CHECK_THROWS_AS(verify_listing({P("12"), P("123")}, GenKind::StampFoldings),
                  std::invalid_argument);
}

TEST_CASE("report serialization carries every field") {
  Listing listing = golden_semis();
  listing.push_back(listing.back());
  const VerifyReport report = verify_listing(listing, GenKind::SemiMeanders);
  const nlohmann::json doc = nlohmann::json::parse(report_to_json(report));
  CHECK(doc["n"] == 5);
  CHECK(doc["kind"] == "semi");
  CHECK(doc["count"] == 25);
  CHECK(doc["all_valid"] == true);
  CHECK(doc["all_adjacent"] == false);
  CHECK(doc["cyclic"] == true);
  CHECK(doc["first_last_ok"].is_boolean());
  REQUIRE(doc["witness_failures"].is_array());
  CHECK_FALSE(doc["witness_failures"].empty());
  for (const auto& f : doc["witness_failures"]) {
    CHECK(f.contains("index"));
    CHECK(f.contains("pair"));
    CHECK(f.contains("reason"));
  }
}

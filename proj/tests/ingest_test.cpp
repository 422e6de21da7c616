#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "osbop/errors.hpp"
#include "osbop/matrix.hpp"
#include "osbop/matrix_io.hpp"
#include "osbop/objective.hpp"
#include "osbop/preflib.hpp"

#include "test_util.hpp"

using namespace osbop;

namespace {

const char* kSmallElection =
    "# FILE NAME: small.toi\n"
    "# TITLE: Small election\n"
    "# DATA TYPE: toi\n"
    "# NUMBER ALTERNATIVES: 3\n"
    "# NUMBER VOTERS: 6\n"
    "# ALTERNATIVE NAME 1: Chicken\n"
    "# ALTERNATIVE NAME 2: Fish\n"
    "# ALTERNATIVE NAME 3: Fruit\n"
    "3: 1,{2,3}\n"
    "2: 3,1,2\n"
    "1: 2\n";

Profile food_profile() {
  Profile profile;
  profile.item_count = 4;
  profile.votes.push_back({60, {{1, 2}, {3, 4}}});
  profile.votes.push_back({40, {{3, 4}, {1, 2}}});
  return profile;
}

/// Independent per-pair tally, iterating votes pair by pair.
PairOrderMatrix oracle_matrix(const Profile& profile) {
  const int n = profile.item_count;
  std::vector<double> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.5);
  for (Item u = 1; u <= n; ++u)
    for (Item v = 1; v <= n; ++v) {
      if (u == v) continue;
      double score = 0.0;
      double count = 0.0;
      for (const Vote& vote : profile.votes) {
        int pu = -1;
        int pv = -1;
        for (std::size_t g = 0; g < vote.groups.size(); ++g)
          for (Item item : vote.groups[g]) {
            if (item == u) pu = static_cast<int>(g);
            if (item == v) pv = static_cast<int>(g);
          }
        if (pu == -1 || pv == -1) continue;
        count += static_cast<double>(vote.multiplicity);
        if (pu < pv)
          score += static_cast<double>(vote.multiplicity);
        else if (pu == pv)
          score += 0.5 * static_cast<double>(vote.multiplicity);
      }
      entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(v - 1)] = count > 0.0 ? score / count : 0.5;
    }
  return PairOrderMatrix(n, std::move(entries));
}

Profile random_profile(int n, Rng& rng) {
  Profile profile;
  profile.item_count = n;
  const int votes = 1 + static_cast<int>(uniform_index(rng, 6));
  for (int i = 0; i < votes; ++i) {
    Vote vote;
    vote.multiplicity = 1 + static_cast<long>(uniform_index(rng, 5));
    std::vector<Item> ranked;
    for (Item u = 1; u <= n; ++u)
      if (uniform_index(rng, 3) != 0) ranked.push_back(u);  // drop ~1/3 of the items
    if (ranked.empty()) ranked.push_back(1 + static_cast<Item>(uniform_index(rng, n)));
    for (std::size_t j = ranked.size(); j > 1; --j)
      std::swap(ranked[j - 1], ranked[uniform_index(rng, j)]);
    for (Item u : ranked) {
      if (vote.groups.empty() || uniform_index(rng, 2) == 0) vote.groups.emplace_back();
      vote.groups.back().push_back(u);
    }
    profile.votes.push_back(std::move(vote));
  }
  return profile;
}

}  // namespace

TEST_CASE("parse_preflib reads votes, names and metadata") {
  const Profile profile = parse_preflib(kSmallElection, "small.toi");
  CHECK(profile.item_count == 3);
  CHECK(profile.source == "small.toi");
  REQUIRE(profile.votes.size() == 3);

  CHECK(profile.votes[0].multiplicity == 3);
  CHECK(profile.votes[0].groups == std::vector<std::vector<Item>>{{1}, {2, 3}});

  CHECK(profile.votes[1].multiplicity == 2);
  CHECK(profile.votes[1].groups == std::vector<std::vector<Item>>{{3}, {1}, {2}});

  CHECK(profile.votes[2].multiplicity == 1);
  CHECK(profile.votes[2].groups == std::vector<std::vector<Item>>{{2}});

  CHECK(profile.alternative_names ==
        std::vector<std::string>{"Chicken", "Fish", "Fruit"});
  CHECK(profile.warnings.empty());
}

TEST_CASE("parse_preflib warns on unknown metadata instead of failing") {
  const Profile profile = parse_preflib(
      "# NUMBER ALTERNATIVES: 2\n# SOMETHING ODD: yes\n1: 1,2\n");
  REQUIRE(profile.warnings.size() == 1);
  CHECK(profile.warnings[0].find("SOMETHING ODD") != std::string::npos);
}

TEST_CASE("parse_preflib reports malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_preflib("# NUMBER ALTERNATIVES: 2\n0: 1,2\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_preflib("# NUMBER ALTERNATIVES: 2\n-3: 1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_preflib("# NUMBER ALTERNATIVES: 2\nx: 1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_preflib("# NUMBER ALTERNATIVES: 2\n1: 1,5\n"), ParseError);
  CHECK_THROWS_AS(parse_preflib("# NUMBER ALTERNATIVES: 3\n1: 1,{2,1}\n"), ParseError);
  CHECK_THROWS_AS(parse_preflib("# NUMBER ALTERNATIVES: 3\n1: 1,{2,3\n"), ParseError);
  CHECK_THROWS_AS(parse_preflib("# NUMBER ALTERNATIVES: 2\n1:\n"), ParseError);
  CHECK_THROWS_AS(parse_preflib("1: 1,2\n"), ParseError);   // vote before the header
  CHECK_THROWS_AS(parse_preflib("# TITLE: no size\n"), ParseError);
}

TEST_CASE("build_matrix reproduces the food preference matrix exactly") {
  const PairOrderMatrix c = build_matrix(food_profile());
  CHECK(c == testutil::food_matrix());
}

TEST_CASE("build_matrix of a single strict vote is that bucket matrix") {
  Profile profile;
  profile.item_count = 3;
  profile.votes.push_back({1, {{1}, {2}, {3}}});
  const PairOrderMatrix c = build_matrix(profile);
  CHECK(c.entries() == to_matrix(parse_bucket_order("1|2|3", 3)).entries());
}

TEST_CASE("unranked pairs default to one half") {
  Profile profile;
  profile.item_count = 3;
  profile.votes.push_back({4, {{1}, {2}}});  // item 3 never ranked
  const PairOrderMatrix c = build_matrix(profile);
  CHECK(c.at(1, 2) == 1.0);
  CHECK(c.at(1, 3) == 0.5);
  CHECK(c.at(2, 3) == 0.5);
}

TEST_CASE("build_matrix matches an independent per-pair tally on fuzzed profiles") {
  Rng rng = make_rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 5));
    const Profile profile = random_profile(n, rng);
    const PairOrderMatrix built = build_matrix(profile);
    const PairOrderMatrix oracle = oracle_matrix(profile);
    for (Item u = 1; u <= n; ++u)
      for (Item v = 1; v <= n; ++v)
        CHECK(built.at(u, v) == doctest::Approx(oracle.at(u, v)).epsilon(1e-12));
  }
}

TEST_CASE("build_matrix profile symmetries") {
  Rng rng = make_rng(1777);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 4));
    const Profile profile = random_profile(n, rng);
    const PairOrderMatrix base = build_matrix(profile);

    SUBCASE("") {}  // keep doctest quiet about empty subcase use

    // Doubling every multiplicity leaves the matrix unchanged.
    Profile doubled = profile;
    for (Vote& vote : doubled.votes) vote.multiplicity *= 2;
    CHECK(build_matrix(doubled).entries() == base.entries());

    // Vote order does not matter (integer tallies are exact).
    Profile rotated = profile;
    std::rotate(rotated.votes.begin(), rotated.votes.begin() + 1, rotated.votes.end());
    CHECK(build_matrix(rotated).entries() == base.entries());

    // Reversing every ranking transposes the matrix.
    Profile reversed = profile;
    for (Vote& vote : reversed.votes)
      std::reverse(vote.groups.begin(), vote.groups.end());
    const PairOrderMatrix transposed = build_matrix(reversed);
    for (Item u = 1; u <= n; ++u)
      for (Item v = 1; v <= n; ++v)
        CHECK(transposed.at(u, v) == doctest::Approx(base.at(v, u)).epsilon(1e-12));
  }
}

TEST_CASE("build_matrix validates its profile") {
  Profile empty;
  empty.item_count = 3;
  CHECK_THROWS_AS(build_matrix(empty), ValidationError);

  Profile bad;
  bad.item_count = 2;
  bad.votes.push_back({1, {{1}, {5}}});
  CHECK_THROWS_AS(build_matrix(bad), ValidationError);

  Profile dup;
  dup.item_count = 2;
  dup.votes.push_back({1, {{1}, {1, 2}}});
  CHECK_THROWS_AS(build_matrix(dup), ValidationError);
}

TEST_CASE("read_matrix parses and validates the CSV format") {
  const std::string text42 =
      "3\n"
      "0.5000,0.7046,0.4934\n"
      "0.2954,0.5000,0.3790\n"
      "0.5066,0.6210,0.5000\n";
  const PairOrderMatrix c = read_matrix(text42);
  CHECK(c == testutil::dataset_42());

  CHECK_NOTHROW(read_matrix("2\n0.5,0.5\n0.5,0.5\n"));

  CHECK_THROWS_AS(read_matrix(""), ParseError);
  CHECK_THROWS_AS(read_matrix("x\n"), ParseError);
  CHECK_THROWS_AS(read_matrix("2\n0.5,0.5\n"), ParseError);
  CHECK_THROWS_AS(read_matrix("2\n0.5,0.5,0.5\n0.5,0.5\n"), ParseError);
  CHECK_THROWS_AS(read_matrix("2\n0.5,abc\n0.5,0.5\n"), ParseError);
  // Complementarity off by 0.1.
  CHECK_THROWS_AS(read_matrix("2\n0.5,0.7\n0.4,0.5\n"), ValidationError);
  // Diagonal off.
  CHECK_THROWS_AS(read_matrix("2\n0.4,0.6\n0.4,0.5\n"), ValidationError);
  // Entry outside [0,1].
  CHECK_THROWS_AS(read_matrix("2\n0.5,1.2\n-0.2,0.5\n"), ValidationError);
}

TEST_CASE("read_matrix repairs sub-tolerance complementarity drift") {
  const PairOrderMatrix c = read_matrix("2\n0.5,0.7000003\n0.2999999,0.5\n");
  CHECK(c.at(1, 2) + c.at(2, 1) == 1.0);
  CHECK(std::abs(c.at(1, 2) - 0.7000002) < 1e-6);
}

TEST_CASE("write_matrix round-trips bit-exactly") {
  CHECK(read_matrix(write_matrix(testutil::dataset_42())) == testutil::dataset_42());
  CHECK(read_matrix(write_matrix(testutil::food_matrix())) == testutil::food_matrix());

  const std::string food_csv = write_matrix(testutil::food_matrix());
  CHECK(food_csv.rfind("4\n", 0) == 0);
  CHECK(std::count(food_csv.begin(), food_csv.end(), '\n') == 5);

  Rng rng = make_rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 6));
    SUBCASE("") {}
    const PairOrderMatrix c = testutil::random_matrix(n, rng);
    CHECK(read_matrix(write_matrix(c)) == c);

    const PairOrderMatrix built = build_matrix(random_profile(n, rng));
    CHECK(read_matrix(write_matrix(built)) == built);
  }
}

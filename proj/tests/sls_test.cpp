#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "osbop/enumeration.hpp"
#include "osbop/errors.hpp"
#include "osbop/objective.hpp"
#include "osbop/sls.hpp"

#include "test_util.hpp"

using namespace osbop;

namespace {

const char* kWide = "8,7|6|5,4,3|2,1";

bool reaches(MutationKind kind, const std::string& target, int trials = 200000) {
  const BucketOrder start = parse_bucket_order(kWide, 8);
  const BucketOrder goal = parse_bucket_order(target, 8);
  Rng rng = make_rng(8675309);
  for (int t = 0; t < trials; ++t)
    if (mutate_order(start, kind, rng) == goal) return true;
  return false;
}

}  // namespace

TEST_CASE("applicable_mutations depends on the order's shape") {
  CHECK(applicable_mutations(parse_bucket_order("1", 1)).empty());

  const auto single_bucket = applicable_mutations(parse_bucket_order("1,2", 2));
  CHECK(single_bucket == std::vector<MutationKind>{MutationKind::kBucketDivision,
                                                   MutationKind::kItemInsertion});

  const auto singletons = applicable_mutations(parse_bucket_order("1|2", 2));
  CHECK(singletons == std::vector<MutationKind>{
                          MutationKind::kBucketInsertion, MutationKind::kBucketsInterchange,
                          MutationKind::kBucketInversion, MutationKind::kBucketUnion,
                          MutationKind::kItemInsertion, MutationKind::kItemInterchange});

  CHECK(applicable_mutations(parse_bucket_order(kWide, 8)).size() == 7);
}

TEST_CASE("mutate_order rejects inapplicable kinds") {
  Rng rng = make_rng(1);
  CHECK_THROWS_AS(
      mutate_order(parse_bucket_order("1,2", 2), MutationKind::kBucketUnion, rng),
      ValidationError);
  CHECK_THROWS_AS(
      mutate_order(parse_bucket_order("1|2", 2), MutationKind::kBucketDivision, rng),
      ValidationError);
  CHECK_THROWS_AS(
      mutate_order(parse_bucket_order("1", 1), MutationKind::kItemInsertion, rng),
      ValidationError);
}

TEST_CASE("every mutation kind can reproduce its worked example") {
  CHECK(reaches(MutationKind::kBucketInsertion, "2,1|8,7|6|5,4,3"));
  CHECK(reaches(MutationKind::kBucketsInterchange, "2,1|6|5,4,3|8,7"));
  CHECK(reaches(MutationKind::kBucketInversion, "5,4,3|6|8,7|2,1"));
  CHECK(reaches(MutationKind::kBucketUnion, "8,7,6|5,4,3|2,1"));
  CHECK(reaches(MutationKind::kBucketDivision, "8,7|6|5,3|4|2,1"));
  CHECK(reaches(MutationKind::kItemInsertion, "8,7,5|6|4,3|2,1"));
  CHECK(reaches(MutationKind::kItemInterchange, "8,5|6|7,4,3|2,1"));
}

TEST_CASE("mutation outputs are always valid partitions") {
  Rng rng = make_rng(555);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 8));
    const BucketOrder order = testutil::random_order(n, rng);
    const auto kinds = applicable_mutations(order);
    if (kinds.empty()) continue;
    const MutationKind kind = kinds[uniform_index(rng, kinds.size())];
    // The BucketOrder constructor inside mutate_order revalidates everything.
    const BucketOrder mutated = mutate_order(order, kind, rng);
    CHECK(mutated.item_count() == n);
  }
}

TEST_CASE("mutate_solution mutates a random selection and keeps weights") {
  Rng rng = make_rng(99);

  SUBCASE("b = 1 mutates the single member") {
    const WeightedEnsemble ensemble({parse_bucket_order("1|2,3|4", 4)}, {1.0});
    int changed = 0;
    for (int t = 0; t < 50; ++t)
      if (mutate_solution(ensemble, rng).orders()[0] != ensemble.orders()[0]) ++changed;
    CHECK(changed > 40);  // the rare no-op draw is an item reinsertion in place
  }
  SUBCASE("single-item domain cannot change") {
    const WeightedEnsemble lone({parse_bucket_order("1", 1)}, {1.0});
    CHECK(mutate_solution(lone, rng) == lone);
  }
  SUBCASE("weights and validity under fuzz") {
    for (int trial = 0; trial < 20000; ++trial) {
      const int n = 1 + static_cast<int>(uniform_index(rng, 6));
      const int b = 1 + static_cast<int>(uniform_index(rng, 4));
      const WeightedEnsemble ensemble = testutil::random_ensemble(n, b, rng);
      const WeightedEnsemble mutated = mutate_solution(ensemble, rng);
      CHECK(mutated.weights() == ensemble.weights());
      CHECK(mutated.size() == ensemble.size());
    }
  }
}

TEST_CASE("initial_solution is deterministic per seed") {
  Rng a = make_rng(42);
  Rng b = make_rng(42);
  CHECK(initial_solution(5, 3, a) == initial_solution(5, 3, b));

  Rng c = make_rng(43);
  const WeightedEnsemble other = initial_solution(5, 3, c);
  Rng d = make_rng(42);
  CHECK(initial_solution(5, 3, d) != other);
}

TEST_CASE("initial_solution on one item is the unique order") {
  Rng rng = make_rng(7);
  const WeightedEnsemble ensemble = initial_solution(1, 4, rng);
  for (const auto& order : ensemble.orders()) CHECK(format_bucket_order(order) == "1");
  for (double w : ensemble.weights()) CHECK(w == 0.25);
}

TEST_CASE("initial_solution samples bucket orders uniformly") {
  // 10^4 ensembles with n = 3, b = 2: each of the 13 orders should fill each
  // slot with frequency 1/13 within 3 sigma.
  const int kSamples = 10000;
  const double p = 1.0 / 13.0;
  const double sigma = std::sqrt(p * (1.0 - p) / kSamples);

  Rng rng = make_rng(20250101);
  std::map<std::string, int> slot_counts[2];
  for (int s = 0; s < kSamples; ++s) {
    const WeightedEnsemble ensemble = initial_solution(3, 2, rng);
    ++slot_counts[0][format_bucket_order(ensemble.orders()[0])];
    ++slot_counts[1][format_bucket_order(ensemble.orders()[1])];
  }

  const std::set<std::string> space = testutil::oracle_all_orders(3);
  for (int slot = 0; slot < 2; ++slot) {
    CHECK(slot_counts[slot].size() == 13);
    for (const std::string& text : space) {
      const double freq = slot_counts[slot][text] / static_cast<double>(kSamples);
      CHECK(std::abs(freq - p) <= 3.0 * sigma);
    }
  }
}

TEST_CASE("tune_weights is a no-op on a single order") {
  const PairOrderMatrix c = testutil::dataset_42();
  const WeightedEnsemble lone({parse_bucket_order("1,2,3", 3)}, {1.0});
  Rng rng = make_rng(3);
  const TunedWeights tuned = tune_weights(c, lone, 100, rng);
  CHECK(tuned.weights == std::vector<double>{1.0});
  CHECK(tuned.fitness == fitness(lone, c));
}

TEST_CASE("tune_weights walks the food example towards the optimum") {
  const PairOrderMatrix food = testutil::food_matrix();
  const WeightedEnsemble ensemble(
      {parse_bucket_order("1,2|3,4", 4), parse_bucket_order("3,4|1,2", 4)}, {0.5, 0.5});

  // At (0.5, 0.5) the aggregate is all ties: eight entries off by 0.1 each.
  const double start = fitness(ensemble, food);
  CHECK(std::abs(start - 0.8) < 1e-9);

  double best = start;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = make_rng(seed);
    const TunedWeights tuned = tune_weights(food, ensemble, 100, rng);
    CHECK(tuned.fitness <= start);
    double sum = 0.0;
    for (double w : tuned.weights) {
      CHECK(w >= 0.0);
      CHECK(w <= 1.0);
      sum += w;
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
    best = std::min(best, tuned.fitness);
  }
  // The optimum sits at weights (0.6, 0.4); 100 proposals home in closely.
  CHECK(best < 0.01);
}

TEST_CASE("tune_weights never returns a worse fitness") {
  Rng rng = make_rng(606);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 4));
    const int b = 1 + static_cast<int>(uniform_index(rng, 4));
    const PairOrderMatrix c = testutil::random_matrix(n, rng);
    std::vector<BucketOrder> orders;
    for (int i = 0; i < b; ++i) orders.push_back(testutil::random_order(n, rng));
    const WeightedEnsemble ensemble = equal_weight_ensemble(std::move(orders));
    const double before = fitness(ensemble, c);
    const TunedWeights tuned = tune_weights(c, ensemble, 25, rng);
    CHECK(tuned.fitness <= before + 1e-12);
  }
}

TEST_CASE("sls_osbop with zero iterations returns the initial solution") {
  const PairOrderMatrix c = testutil::dataset_42();
  SlsConfig config;
  config.b = 2;
  config.equal_weights = true;
  config.outer_iters = 0;
  config.seed = 71;

  const SlsResult result = sls_osbop(c, config);
  CHECK(result.trace.points.size() == 1);
  CHECK(result.trace.points.front().iteration == 0);
  CHECK(result.fitness == doctest::Approx(fitness(result.ensemble, c)).epsilon(1e-12));

  Rng rng = make_rng(71);
  const WeightedEnsemble expected = initial_solution(3, 2, rng);
  CHECK(result.ensemble == expected);
}

TEST_CASE("sls_osbop finds the 3-item optimum with b = 1") {
  const PairOrderMatrix c = testutil::dataset_42();
  for (std::uint64_t seed : {1, 2, 3}) {
    SlsConfig config;
    config.b = 1;
    config.equal_weights = true;
    config.outer_iters = 10000;
    config.seed = seed;
    const SlsResult result = sls_osbop(c, config);
    CHECK(std::abs(result.fitness - 0.6644) < 1e-9);  // global optimum, 13 candidates
    CHECK(format_bucket_order(result.ensemble.orders()[0]) == "1,2,3");
  }
}

TEST_CASE("sls_osbop reaches the best-found value for b = 2 with tuned weights") {
  const PairOrderMatrix c = testutil::dataset_42();
  double best = 1e9;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SlsConfig config;
    config.b = 2;
    config.equal_weights = false;
    config.outer_iters = 2000;
    config.tune_iters = 100;
    config.seed = seed;
    best = std::min(best, sls_osbop(c, config).fitness);
  }
  CHECK(best <= 0.1804 + 1e-3);
}

TEST_CASE("sls_osbop traces are non-increasing and deterministic") {
  Rng seed_rng = make_rng(8080);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(seed_rng, 4));
    const PairOrderMatrix c = testutil::random_matrix(n, seed_rng);

    SlsConfig config;
    config.b = 1 + static_cast<int>(uniform_index(seed_rng, 3));
    config.equal_weights = (trial % 2 == 0);
    config.outer_iters = 300;
    config.tune_iters = 20;
    config.seed = seed_rng();

    const SlsResult a = sls_osbop(c, config);
    const SlsResult b = sls_osbop(c, config);

    CHECK(a.fitness == b.fitness);
    CHECK(a.ensemble == b.ensemble);
    CHECK(a.trace.accepted_moves == b.trace.accepted_moves);
    REQUIRE(a.trace.points.size() == b.trace.points.size());
    REQUIRE(a.trace.points.size() == 301);

    double previous = a.trace.points.front().best_fitness;
    for (std::size_t i = 0; i < a.trace.points.size(); ++i) {
      CHECK(a.trace.points[i].iteration == static_cast<long>(i));
      CHECK(a.trace.points[i].best_fitness == b.trace.points[i].best_fitness);
      CHECK(a.trace.points[i].best_fitness <= previous + 1e-15);
      previous = a.trace.points[i].best_fitness;
    }
    CHECK(a.trace.accepted_moves <= 300);
    CHECK(a.fitness >= utopia(c, config.b).value - 1e-12);

    // The reported fitness re-evaluates from the reported ensemble.
    CHECK(a.fitness == doctest::Approx(fitness(a.ensemble, c)).epsilon(1e-12));
  }
}

TEST_CASE("sls_osbop b = 1 dominates the utopia bound") {
  Rng rng = make_rng(12021);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(uniform_index(rng, 5));
    const PairOrderMatrix c = testutil::random_matrix(n, rng);
    SlsConfig config;
    config.b = 1;
    config.outer_iters = 200;
    config.seed = rng();
    CHECK(sls_osbop(c, config).fitness >= utopia(c, 1).value - 1e-12);
  }
}

TEST_CASE("equal-fitness moves are accepted, strict worsenings are not") {
  // On a 2-item instance the two strict orders tie, so the walk keeps moving
  // between them until the union move finds the strictly better tied order.
  const PairOrderMatrix uniform(2, {0.5, 0.5, 0.5, 0.5});
  SlsConfig config;
  config.b = 1;
  config.outer_iters = 100;
  config.seed = 12;

  const SlsResult result = sls_osbop(uniform, config);
  CHECK(result.fitness == 0.0);  // the all-tied order is the unique optimum
  CHECK(format_bucket_order(result.ensemble.orders()[0]) == "1,2");
  // Sideways moves between "1|2" and "2|1" (if any happened before the
  // optimum) plus the stay-at-optimum unions all count as accepted.
  CHECK(result.trace.accepted_moves > 0);
  CHECK(result.trace.points.back().best_fitness == 0.0);
}

TEST_CASE("max_evaluations caps the search early") {
  const PairOrderMatrix c = testutil::dataset_42();
  SlsConfig config;
  config.b = 2;
  config.equal_weights = false;
  config.outer_iters = 1000;
  config.tune_iters = 100;
  config.seed = 4;
  config.max_evaluations = 250;

  const SlsResult result = sls_osbop(c, config);
  CHECK(result.trace.evaluations >= 250);            // finishes the running iteration
  CHECK(result.trace.evaluations <= 250 + 101);
  CHECK(result.trace.points.size() < 1001);
}

TEST_CASE("trace_to_csv emits one line per point") {
  const PairOrderMatrix c = testutil::dataset_42();
  SlsConfig config;
  config.b = 1;
  config.outer_iters = 5;
  config.seed = 9;
  const SlsResult result = sls_osbop(c, config);
  const std::string csv = trace_to_csv(result.trace);

  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 7);  // header + 6 points
  CHECK(csv.rfind("iteration,best_fitness\n", 0) == 0);
}

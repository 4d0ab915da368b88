#include <doctest.h>

#include "owa/algorithms.hpp"
#include "owa/instances.hpp"

using namespace owa;

namespace {

const long long kOracleLimit = 5000;

ProblemInstance random_small(Kind kind, int K, std::uint64_t seed, Cost cost_max = 20) {
  return gen_random(kind, {}, K, cost_max, seed);
}

} // namespace

TEST_CASE("brute force oracle on the tight selection family") {
  auto inst = gen_tight_selection(3);
  auto uniform = brute_force_owa(inst, preset_weights(WeightClass::average(), 3));
  CHECK(uniform.owa == doctest::Approx(1.0));  // every solution totals 3 across scenarios

  auto maxi = brute_force_owa(inst, preset_weights(WeightClass::maximum(), 3));
  CHECK(maxi.owa == doctest::Approx(1.0));  // attained e.g. by {e_4, e_5, e_6}
  CHECK(evaluate(inst, Solution({3, 4, 5}), preset_weights(WeightClass::maximum(), 3)).owa ==
        doctest::Approx(1.0));

  auto zero = gen_random(Kind::Selection, {}, 3, 0, 1);
  CHECK(brute_force_owa(zero, preset_weights(WeightClass::maximum(), 3)).owa == 0.0);
}

TEST_CASE("min-average and min-min are exact") {
  auto table = gen_tight_selection(3);
  CHECK(solve_min_average(table).owa == doctest::Approx(1.0));
  CHECK(solve_min_min(table).owa == doctest::Approx(0.0));

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (Kind kind : {Kind::Selection, Kind::ShortestPath, Kind::SpanningTree}) {
      auto inst = random_small(kind, 3, seed);
      auto avg = solve_min_average(inst);
      auto oracle_avg = brute_force_owa(inst, preset_weights(WeightClass::average(), 3));
      CHECK(avg.owa == doctest::Approx(oracle_avg.owa).epsilon(1e-9));

      auto mn = solve_min_min(inst);
      auto oracle_mn = brute_force_owa(inst, preset_weights(WeightClass::minimum(), 3));
      CHECK(mn.owa == doctest::Approx(oracle_mn.owa).epsilon(1e-9));
    }
  }
}

TEST_CASE("single scenario reduces every algorithm to the deterministic optimum") {
  auto inst = random_small(Kind::Selection, 1, 5);
  auto det = brute_force_owa(inst, WeightVector({1.0}));
  CHECK(solve_min_average(inst).owa == doctest::Approx(det.owa));
  CHECK(solve_min_min(inst).owa == doctest::Approx(det.owa));
  CHECK(solve_minmax_aggregate(inst).owa == doctest::Approx(det.owa));
}

TEST_CASE("identical scenarios make min-max aggregation exact") {
  auto base = random_small(Kind::Selection, 1, 9);
  ProblemInstance inst = base;
  inst.scenarios.costs.push_back(base.scenarios.costs[0]);
  inst.scenarios.costs.push_back(base.scenarios.costs[0]);
  inst.scenarios.K = 3;
  auto r = solve_minmax_aggregate(inst);
  auto oracle = brute_force_owa(inst, preset_weights(WeightClass::maximum(), 3));
  CHECK(r.owa == doctest::Approx(oracle.owa));
  CHECK(r.certificate->claimed_ratio == 3.0);
}

TEST_CASE("two-scenario algorithm matches brute force for alpha <= 1/2") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = gen_random(Kind::Selection, {.n = 8, .p = 3}, 2, 25, seed);
    for (double alpha : {0.0, 0.1, 0.3, 0.5}) {
      auto r = solve_two_scenario_owa(inst, alpha);
      auto oracle = brute_force_owa(inst, preset_weights(WeightClass::hurwicz(alpha), 2));
      CHECK(r.owa == doctest::Approx(oracle.owa).epsilon(1e-9));
    }
  }
  auto inst = random_small(Kind::Selection, 2, 3);
  CHECK(solve_two_scenario_owa(inst, 0.0).owa == doctest::Approx(solve_min_min(inst).owa));
  CHECK(solve_two_scenario_owa(inst, 0.5).owa ==
        doctest::Approx(solve_min_average(inst).owa));
  CHECK_THROWS_AS(solve_two_scenario_owa(inst, 0.7), ParameterError);
  CHECK_THROWS_AS(solve_two_scenario_owa(random_small(Kind::Selection, 3, 3), 0.3),
                  ParameterError);
}

TEST_CASE("H-identity: OWA = min(H1, H2) for K = 2") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = random_small(Kind::Selection, 2, seed);
    for (double alpha : {0.1, 0.3, 0.5}) {
      WeightVector w = preset_weights(WeightClass::hurwicz(alpha), 2);
      for (const auto &x : enumerate_feasible(inst, kOracleLimit)) {
        auto sc = scenario_costs_of(inst, x);
        double f1 = static_cast<double>(sc[0]), f2 = static_cast<double>(sc[1]);
        double h1 = std::max(f1, alpha * f2 + (1 - alpha) * f1);
        double h2 = std::max(f2, alpha * f1 + (1 - alpha) * f2);
        CHECK(owa_value(sc, w) == doctest::Approx(std::min(h1, h2)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("aggregation ratio w1*K holds and is tight on the table family") {
  // tightness witness: the candidate {e_1..e_K} attains exactly w1*K
  for (int K = 2; K <= 6; ++K) {
    auto inst = gen_tight_selection(K);
    WeightVector w = preset_weights(WeightClass::maximum(), K);
    std::vector<int> bad(K);
    std::iota(bad.begin(), bad.end(), 0);
    CHECK(evaluate(inst, Solution(bad), w).owa == doctest::Approx(K));
    CHECK(brute_force_owa(inst, w).owa == doctest::Approx(1.0));
  }

  // soundness on random instances with nonincreasing weights
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = random_small(Kind::Selection, 3, seed);
    for (auto wv : {std::vector<double>{1, 0, 0}, {0.5, 0.3, 0.2}, {1.0 / 3, 1.0 / 3, 1.0 / 3}}) {
      WeightVector w(wv);
      auto r = solve_owa_aggregate(inst, w);
      REQUIRE(r.certificate.has_value());
      CHECK(r.certificate->claimed_ratio == doctest::Approx(wv[0] * 3));
      auto opt = brute_force_owa(inst, w).owa;
      CHECK(r.owa <= r.certificate->claimed_ratio * opt + 1e-6);
    }
  }
}

TEST_CASE("aggregation with uniform weights is exact") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = random_small(Kind::ShortestPath, 4, seed);
    WeightVector w = preset_weights(WeightClass::average(), 4);
    CHECK(solve_owa_aggregate(inst, w).owa ==
          doctest::Approx(brute_force_owa(inst, w).owa).epsilon(1e-9));
  }
}

TEST_CASE("aggregation with nondecreasing weights runs uncertified") {
  auto inst = random_small(Kind::Selection, 3, 11);
  auto r = solve_owa_aggregate(inst, WeightVector({0.1, 0.3, 0.6}));
  CHECK_FALSE(r.certificate.has_value());
  CHECK(is_feasible(inst, r.solution));
}

TEST_CASE("hurwicz top-two certificate and exactness at the boundary") {
  // K=2, alpha=1: reduces to min-max aggregation, ratio 2
  auto inst2 = random_small(Kind::Selection, 2, 17);
  auto r = solve_hurwicz_top2(inst2, 1.0);
  CHECK(r.certificate->claimed_ratio == doctest::Approx(2.0));
  CHECK(r.owa == doctest::Approx(solve_minmax_aggregate(inst2).owa));

  // K=2, alpha=0.5: ratio 1 => must equal the optimum
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = random_small(Kind::Selection, 2, seed);
    auto h = solve_hurwicz_top2(inst, 0.5);
    CHECK(h.certificate->claimed_ratio == doctest::Approx(1.0));
    auto opt = brute_force_owa(inst, preset_weights(WeightClass::hurwicz(0.5), 2)).owa;
    CHECK(h.owa == doctest::Approx(opt).epsilon(1e-9));
  }

  // K=4, alpha=0.5: ratio K-1 = 3
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto inst = random_small(Kind::Selection, 4, seed);
    auto h = solve_hurwicz_top2(inst, 0.5);
    CHECK(h.certificate->claimed_ratio == doctest::Approx(3.0));
    auto opt = brute_force_owa(inst, preset_weights(WeightClass::hurwicz(0.5), 4)).owa;
    CHECK(h.owa <= 3.0 * opt + 1e-6);
  }

  CHECK_THROWS_AS(solve_hurwicz_top2(random_small(Kind::Selection, 1, 1), 0.5),
                  ParameterError);
  CHECK_FALSE(solve_hurwicz_top2(random_small(Kind::Selection, 3, 1), 0.3)
                  .certificate.has_value());
}

TEST_CASE("hurwicz lower bound: alpha * max_j F <= OWA") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = random_small(Kind::Selection, 3, seed);
    for (double alpha : {0.3, 0.5, 0.8, 1.0}) {
      WeightVector w = preset_weights(WeightClass::hurwicz(alpha), 3);
      for (const auto &x : enumerate_feasible(inst, kOracleLimit)) {
        auto sc = scenario_costs_of(inst, x);
        double mx = static_cast<double>(*std::max_element(sc.begin(), sc.end()));
        CHECK(owa_value(sc, w) >= alpha * mx - 1e-9);
      }
    }
  }
}

TEST_CASE("hurwicz via min-max: certificate cases") {
  auto inst = random_small(Kind::Selection, 3, 23);

  // exact inner, alpha = 1: hurwicz(1) is the maximum criterion
  auto exact = exact_minmax_solver();
  auto r1 = solve_hurwicz_via_minmax(inst, 1.0, exact);
  CHECK(r1.certificate->claimed_ratio == doctest::Approx(1.0));
  CHECK(r1.owa ==
        doctest::Approx(brute_force_owa(inst, preset_weights(WeightClass::maximum(), 3)).owa));

  // K-approximate inner, alpha = 0.5 => certificate 2K
  auto agg = aggregate_minmax_solver();
  auto r2 = solve_hurwicz_via_minmax(inst, 0.5, agg);
  bool zero_scenario =
      *std::min_element(r2.scenario_costs.begin(), r2.scenario_costs.end()) == 0;
  if (zero_scenario)
    CHECK(r2.certificate->claimed_ratio == doctest::Approx(3.0));
  else
    CHECK(r2.certificate->claimed_ratio == doctest::Approx(6.0));

  // lifted instance: the zero scenario forces the gamma branch
  auto lifted = gen_hurwicz_lift(inst);
  auto r3 = solve_hurwicz_via_minmax(lifted, 0.5, agg);
  CHECK(r3.certificate->basis == "gamma");

  CHECK_THROWS_AS(solve_hurwicz_via_minmax(inst, 0.0, exact), ParameterError);
}

TEST_CASE("quantile enumeration: boundary cases and exactness") {
  auto exact = exact_minmax_solver();
  auto inst = random_small(Kind::Selection, 4, 31);

  // k=1 is a single min-max solve
  auto q1 = solve_quantile_enum(inst, 1, exact);
  CHECK(q1.owa ==
        doctest::Approx(brute_force_owa(inst, preset_weights(WeightClass::maximum(), 4)).owa));

  // k=K equals min-min
  auto qK = solve_quantile_enum(inst, 4, exact);
  CHECK(qK.owa == doctest::Approx(solve_min_min(inst).owa));

  // K=4, k=3 (median) against brute force
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto rinst = random_small(Kind::Selection, 4, seed);
    auto q = solve_quantile_enum(rinst, 3, exact);
    CHECK(q.certificate->basis == "exact");
    auto opt = brute_force_owa(rinst, preset_weights(WeightClass::quantile(3), 4)).owa;
    CHECK(q.owa == doctest::Approx(opt).epsilon(1e-9));
  }

  CHECK_THROWS_AS(solve_quantile_enum(inst, 5, exact), ParameterError);
  CHECK_THROWS_AS(solve_quantile_enum(inst, 3, exact, 2), BudgetError);
}

TEST_CASE("reports re-validate: owa equals evaluate of the solution") {
  auto inst = random_small(Kind::ShortestPath, 3, 41);
  WeightVector w({0.5, 0.3, 0.2});
  for (const AlgorithmReport &r :
       {solve_min_average(inst), solve_min_min(inst), solve_minmax_aggregate(inst),
        solve_owa_aggregate(inst, w), solve_hurwicz_top2(inst, 0.7)}) {
    CHECK(is_feasible(inst, r.solution));
    CHECK(r.scenario_costs == scenario_costs_of(inst, r.solution));
  }
}

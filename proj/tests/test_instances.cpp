#include <doctest.h>

#include "owa/algorithms.hpp"
#include "owa/instances.hpp"

using namespace owa;

namespace {

bool subset_sums_to(const std::vector<Cost> &a, Cost target) {
  std::set<Cost> sums{0};
  for (Cost x : a) {
    std::set<Cost> next = sums;
    for (Cost s : sums) next.insert(s + x);
    sums = std::move(next);
  }
  return sums.count(target) > 0;
}

/// minimum number of satisfied clauses over all assignments
int min_satisfied(const std::vector<std::vector<int>> &clauses, int nv) {
  int best = static_cast<int>(clauses.size());
  for (int mask = 0; mask < (1 << nv); ++mask) {
    int sat = 0;
    for (const auto &cl : clauses) {
      bool s = false;
      for (int lit : cl) {
        int var = std::abs(lit) - 1;
        bool val = (mask >> var) & 1;
        if ((lit > 0) == val) s = true;
      }
      sat += s;
    }
    best = std::min(best, sat);
  }
  return best;
}

std::vector<std::vector<int>> random_formula(detail::Rng &rng, int nv, int m) {
  std::vector<std::vector<int>> clauses(m);
  for (auto &cl : clauses) {
    int len = 1 + static_cast<int>(rng.next() % std::min(3, nv));
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < len)
      vars.insert(1 + static_cast<int>(rng.next() % nv));
    for (int v : vars) cl.push_back(rng.next() % 2 ? v : -v);
  }
  return clauses;
}

} // namespace

TEST_CASE("tight selection family layout") {
  auto inst = gen_tight_selection(3);
  CHECK(inst.n() == 6);
  CHECK(inst.K() == 3);
  CHECK(inst.selection().p == 3);
  CHECK(inst.scenarios.costs == std::vector<std::vector<Cost>>{
                                    {0, 0, 0, 1, 0, 0},
                                    {0, 0, 0, 0, 1, 0},
                                    {1, 1, 1, 0, 0, 1}});

  auto degenerate = gen_tight_selection(1);
  CHECK(degenerate.scenarios.costs == std::vector<std::vector<Cost>>{{1, 1}});

  CHECK_THROWS_AS(gen_tight_selection(0), ParameterError);
}

TEST_CASE("partition gadget: yes-instance reaches S, no-instance stays above") {
  CHECK_THROWS_AS(gen_partition_gadget({1, 1, 1}, Kind::ShortestPath), ParameterError);

  detail::Rng rng(99);
  WeightVector w = preset_weights(WeightClass::hurwicz(0.6), 2);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 4);
    std::vector<Cost> a(n);
    for (auto &x : a) x = 1 + static_cast<Cost>(rng.next() % 9);
    Cost total = std::accumulate(a.begin(), a.end(), Cost{0});
    if (trial % 2 == 0) a.push_back(total);  // forced yes: second half equals the first
    total = std::accumulate(a.begin(), a.end(), Cost{0});
    if (total % 2 != 0) a.push_back(total % 2), total += a.back();
    Cost S = total / 2;

    for (Kind kind : {Kind::ShortestPath, Kind::STCut, Kind::Assignment}) {
      auto inst = gen_partition_gadget(a, kind);
      auto opt = brute_force_owa(inst, w, 1 << 14).owa;
      if (subset_sums_to(a, S))
        CHECK(opt == doctest::Approx(static_cast<double>(S)));
      else
        CHECK(opt > static_cast<double>(S) + 1e-9);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("partition gadget example A=(2,3,3,4)") {
  auto inst = gen_partition_gadget({2, 3, 3, 4}, Kind::ShortestPath);
  WeightVector w = preset_weights(WeightClass::hurwicz(0.6), 2);
  CHECK(brute_force_owa(inst, w, 100).owa == doctest::Approx(6.0));  // S = 6, yes-instance
}

TEST_CASE("path and tree gadget optima coincide; every path maps to a tree") {
  std::vector<Cost> a{2, 3, 3, 4};
  auto path_inst = gen_partition_gadget(a, Kind::ShortestPath);
  auto tree_inst = gen_partition_gadget(a, Kind::SpanningTree);
  const int n = static_cast<int>(a.size());

  std::set<std::vector<Cost>> tree_vectors;
  for (const auto &t : enumerate_feasible(tree_inst, 100000))
    tree_vectors.insert(scenario_costs_of(tree_inst, t));
  for (const auto &p : enumerate_feasible(path_inst, 1000)) {
    // add the dummy of every unchosen branch to span the whole chain
    Solution tree = p;
    for (int i = 0; i < n; ++i) {
      bool upper = std::find(p.elements.begin(), p.elements.end(), i) != p.elements.end();
      tree.elements.push_back(2 * n + 2 * i + (upper ? 1 : 0));
    }
    tree = Solution(tree.elements);
    CHECK(is_feasible(tree_inst, tree));
    CHECK(scenario_costs_of(tree_inst, tree) == scenario_costs_of(path_inst, p));
    CHECK(tree_vectors.count(scenario_costs_of(path_inst, p)) == 1);
  }

  WeightVector w = preset_weights(WeightClass::hurwicz(0.8), 2);
  CHECK(brute_force_owa(path_inst, w, 1000).owa ==
        doctest::Approx(brute_force_owa(tree_inst, w, 100000).owa));
}

TEST_CASE("min-3-sat gadget: OWA reaches zero iff few clauses are satisfiable") {
  auto clauses = std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}};

  auto [inst1, w1] = gen_min3sat_gadget(clauses, 1, Min3SatVariant::Nondecreasing);
  CHECK(classify_weights(w1).kind == WeightKind::Nondecreasing);
  CHECK(brute_force_owa(inst1, w1, 100).owa == doctest::Approx(0.0));
  // x1 = x2 = 1 satisfies only the first clause; its path costs (2,0,0)
  auto ev = evaluate(inst1, Solution({0, 1}), w1);
  CHECK(ev.scenario_costs == std::vector<Cost>{2, 0, 0});
  CHECK(ev.owa == doctest::Approx(0.0));

  auto [inst0, w0] = gen_min3sat_gadget(clauses, 0, Min3SatVariant::Nondecreasing);
  CHECK(brute_force_owa(inst0, w0, 100).owa >= 1.0 / 3 - 1e-9);

  detail::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int nv = 2 + static_cast<int>(rng.next() % 4);
    int m = 2 + static_cast<int>(rng.next() % 4);
    auto f = random_formula(rng, nv, m);
    int L = static_cast<int>(rng.next() % m);
    int ms = min_satisfied(f, nv);

    auto [inst, w] = gen_min3sat_gadget(f, L, Min3SatVariant::Nondecreasing);
    double opt = brute_force_owa(inst, w, 5000).owa;
    CHECK((opt <= 1e-9) == (ms <= L));

    auto [minst, mw] = gen_min3sat_gadget(f, L, Min3SatVariant::Median);
    CHECK(mw[mw.size() / 2] == 1.0);  // unit weight at the median position

    double mopt = brute_force_owa(minst, mw, 5000).owa;
    CHECK((mopt <= 1e-9) == (ms <= L));
  }
}

TEST_CASE("positive-cost variant keeps the rho gap") {
  auto clauses = std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}};
  const Cost rho = 2;
  auto [inst, w] = gen_min3sat_gadget(clauses, 1, Min3SatVariant::Positive, rho);
  const int nv = 2;
  for (const auto &row : inst.scenarios.costs)
    for (Cost c : row) CHECK(c >= 1);
  // yes-instance: optimum at most nv
  double opt = brute_force_owa(inst, w, 100).owa;
  CHECK(opt <= static_cast<double>(nv) + 1e-9);

  // same formula with L = 0 is a no-instance: optimum at least (nv+1)*rho
  auto [no_inst, no_w] = gen_min3sat_gadget(clauses, 0, Min3SatVariant::Positive, rho);
  double no_opt = brute_force_owa(no_inst, no_w, 100).owa;
  CHECK(no_opt >= static_cast<double>((nv + 1) * rho) - 1e-9);
  CHECK(no_opt / opt >= static_cast<double>(rho) - 1e-9);
}

TEST_CASE("formula parser") {
  auto f = parse_formula("1 2\n-1\n\n-2\n");
  CHECK(f == std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}});
  CHECK_THROWS_AS(parse_formula("1 0 2"), ParseError);
  CHECK_THROWS_AS(parse_formula("1 2 3 4"), ParseError);
  CHECK_THROWS_AS(parse_formula("1 x"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("hurwicz lift identity holds for every enumerated solution") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto base = gen_random(Kind::Selection, {}, 3, 12, seed);
    auto lift = gen_hurwicz_lift(base);
    CHECK(lift.K() == 4);
    for (double alpha : {0.3, 0.5, 1.0}) {
      WeightVector w = preset_weights(WeightClass::hurwicz(alpha), lift.K());
      for (const auto &x : enumerate_feasible(base, 5000)) {
        auto sc = scenario_costs_of(base, x);
        Cost mx = *std::max_element(sc.begin(), sc.end());
        CHECK(evaluate(lift, x, w).owa ==
              doctest::Approx(alpha * static_cast<double>(mx)).epsilon(1e-12));
      }
    }
  }

  // brute-force check of the table-family lift at alpha = 0.5
  auto lift = gen_hurwicz_lift(gen_tight_selection(3));
  WeightVector w = preset_weights(WeightClass::hurwicz(0.5), 4);
  CHECK(brute_force_owa(lift, w).owa == doctest::Approx(0.5));

  // lifting twice keeps the max and the zero minimum
  auto twice = gen_hurwicz_lift(lift);
  WeightVector w2 = preset_weights(WeightClass::hurwicz(0.5), 5);
  CHECK(brute_force_owa(twice, w2).owa == doctest::Approx(0.5));
}

TEST_CASE("random generation is seed-deterministic") {
  for (Kind kind : {Kind::Selection, Kind::ShortestPath, Kind::SpanningTree, Kind::Assignment,
                    Kind::STCut}) {
    auto a = gen_random(kind, {}, 3, 50, 42);
    auto b = gen_random(kind, {}, 3, 50, 42);
    auto c = gen_random(kind, {}, 3, 50, 43);
    CHECK(a == b);
    CHECK(a.scenarios.costs != c.scenarios.costs);
  }
  auto zero = gen_random(Kind::Selection, {}, 2, 0, 1);
  for (const auto &row : zero.scenarios.costs)
    for (Cost c : row) CHECK(c == 0);
}

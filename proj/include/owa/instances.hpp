/**
 * @file instances.hpp
 * @brief Instance generators: the hard-instance gadget families behind the
 *        complexity reductions, plus seeded random instances.
 *
 * Gadgets:
 *  - tight selection: the 2K-element family on which the aggregation
 *    algorithm's w_1*K ratio is attained exactly;
 *  - partition chain: yes/no gap instances built from a Partition input,
 *    for shortest path, spanning tree, s-t cut and assignment;
 *  - min-3-sat chains: instances whose optimum is 0 iff some assignment
 *    satisfies at most L clauses (nondecreasing-weight, median-weight and
 *    strictly-positive-cost variants);
 *  - hurwicz lift: appends an all-zero scenario, turning any min-max
 *    instance into a Hurwicz one with OWA = alpha * (min-max value).
 */

#ifndef OWA_INSTANCES_HPP
#define OWA_INSTANCES_HPP

#include <cstdint>
#include <sstream>

#include "owa/problems.hpp"

namespace owa {

/// Selection instance with n = 2K, p = K: elements e_1..e_K cost 1 under
/// the last scenario only; e_{K+1}..e_{2K} form the identity block. Every
/// element has the same aggregated cost, so the aggregation algorithm may
/// return {e_1..e_K} with OWA = w_1*K while the optimum is 1.
inline ProblemInstance gen_tight_selection(int K) {
  if (K < 1) throw ParameterError("gen_tight_selection: K >= 1 required");
  const int n = 2 * K;
  std::vector<std::vector<Cost>> costs(K, std::vector<Cost>(n, 0));
  for (int i = 0; i < K; ++i) costs[K - 1][i] = 1;
  for (int j = 0; j < K; ++j) costs[j][K + j] = 1;
  ProblemInstance inst;
  inst.kind = Kind::Selection;
  inst.structure = SelectionStructure{K};
  inst.scenarios = ScenarioSet(n, K, std::move(costs));
  inst.validate();
  return inst;
}

namespace detail {

/// Chain of diamonds: stage i offers an upper branch (arc e_i then a
/// dummy) and a lower branch (arc f_i then a dummy). 2^|A| simple s-t
/// paths; every path extends to a spanning tree of identical scenario
/// costs by adding one dummy per unchosen branch.
/// Elements: e_i -> i, f_i -> n+i, dummies -> 2n..4n-1.
inline DigraphStructure partition_chain(int n) {
  DigraphStructure g;
  g.num_vertices = (n + 1) + 2 * n;  // u_0..u_n then per-stage upper/lower
  g.s = 0;
  g.t = n;
  auto upper = [&](int i) { return n + 1 + 2 * i; };
  auto lower = [&](int i) { return n + 2 + 2 * i; };
  for (int i = 0; i < n; ++i) {
    g.arcs.push_back({i, upper(i), i});              // e_i
    g.arcs.push_back({i, lower(i), n + i});          // f_i
    g.arcs.push_back({upper(i), i + 1, 2 * n + 2 * i});      // dummy after e_i
    g.arcs.push_back({lower(i), i + 1, 2 * n + 2 * i + 1});  // dummy after f_i
  }
  return g;
}

/// Chain with parallel arcs e_i / f_i and no dummies; used by the
/// min-3-sat gadgets so that the positive-cost variant has strictly
/// positive costs on every element. Elements: e_i -> i, f_i -> n+i.
inline DigraphStructure parallel_chain(int n) {
  DigraphStructure g;
  g.num_vertices = n + 1;
  g.s = 0;
  g.t = n;
  for (int i = 0; i < n; ++i) {
    g.arcs.push_back({i, i + 1, i});      // e_i (literal x_{i+1})
    g.arcs.push_back({i, i + 1, n + i});  // f_i (literal not-x_{i+1})
  }
  return g;
}

inline std::vector<std::vector<Cost>> partition_costs(const std::vector<Cost> &a, int n_elems) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Cost>> costs(2, std::vector<Cost>(n_elems, 0));
  for (int i = 0; i < n; ++i) {
    costs[0][i] = a[i];      // e_i under c_1
    costs[1][n + i] = a[i];  // f_i under c_2
  }
  return costs;
}

} // namespace detail

/// Yes/no gap instance from a Partition input A (sum must be even):
/// scenario c_1 prices the e-side, c_2 the f-side. For alpha > 1/2 the
/// OWA optimum equals S = sum(A)/2 iff some subset of A sums to S.
inline ProblemInstance gen_partition_gadget(const std::vector<Cost> &a, Kind target_kind) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw ParameterError("gen_partition_gadget: empty input");
  Cost total = 0;
  for (Cost x : a) {
    if (x <= 0) throw ParameterError("gen_partition_gadget: entries must be positive");
    total += x;
  }
  if (total % 2 != 0) throw ParameterError("gen_partition_gadget: sum of A must be even");

  ProblemInstance inst;
  inst.kind = target_kind;
  switch (target_kind) {
    case Kind::ShortestPath: {
      inst.structure = detail::partition_chain(n);
      inst.scenarios = ScenarioSet(4 * n, 2, detail::partition_costs(a, 4 * n));
      break;
    }
    case Kind::SpanningTree: {
      DigraphStructure dg = detail::partition_chain(n);
      GraphStructure g;
      g.num_vertices = dg.num_vertices;
      for (const auto &arc : dg.arcs) g.edges.push_back({arc.from, arc.to, arc.element});
      inst.structure = std::move(g);
      inst.scenarios = ScenarioSet(4 * n, 2, detail::partition_costs(a, 4 * n));
      break;
    }
    case Kind::STCut: {
      // n disjoint s->v_i->t two-arc paths; every cut picks e_i or f_i per i
      DigraphStructure g;
      g.num_vertices = n + 2;
      g.s = 0;
      g.t = 1;
      for (int i = 0; i < n; ++i) {
        g.arcs.push_back({0, 2 + i, i});      // e_i
        g.arcs.push_back({2 + i, 1, n + i});  // f_i
      }
      inst.structure = std::move(g);
      inst.scenarios = ScenarioSet(2 * n, 2, detail::partition_costs(a, 2 * n));
      break;
    }
    case Kind::Assignment: {
      // one 2x2 block per item with two perfect matchings: {e_i, g_i}
      // (pays a_i under c_1) or {f_i, h_i} (pays a_i under c_2)
      BipartiteStructure g;
      g.size = 2 * n;
      for (int i = 0; i < n; ++i) {
        g.edges.push_back({2 * i, 2 * i, i});                    // e_i
        g.edges.push_back({2 * i, 2 * i + 1, n + i});            // f_i
        g.edges.push_back({2 * i + 1, 2 * i, 2 * n + 2 * i});    // dummy h_i
        g.edges.push_back({2 * i + 1, 2 * i + 1, 2 * n + 2 * i + 1});  // dummy g_i
      }
      inst.structure = std::move(g);
      inst.scenarios = ScenarioSet(4 * n, 2, detail::partition_costs(a, 4 * n));
      break;
    }
    default:
      throw ParameterError("gen_partition_gadget: unsupported target kind");
  }
  inst.validate();
  return inst;
}

enum class Min3SatVariant { Nondecreasing, Median, Positive };

/// Parses a clause list: one clause per line, literals as nonzero
/// integers (+i for x_i, -i for its negation), at most three per clause.
inline std::vector<std::vector<int>> parse_formula(const std::string &text) {
  std::vector<std::vector<int>> clauses;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> clause;
    int lit;
    while (ls >> lit) {
      if (lit == 0)
        throw ParseError("formula line " + std::to_string(lineno) + ": literal 0");
      clause.push_back(lit);
    }
    if (!ls.eof())
      throw ParseError("formula line " + std::to_string(lineno) + ": expected integers");
    if (clause.empty()) continue;
    if (clause.size() > 3)
      throw ParseError("formula line " + std::to_string(lineno) + ": more than 3 literals");
    clauses.push_back(std::move(clause));
  }
  if (clauses.empty()) throw ParseError("formula: no clauses");
  return clauses;
}

/// Min-3-SAT gadget on the parallel chain: arcs e_i / f_i encode
/// x_i = 1 / 0; one scenario per clause prices the clause's literal arcs.
/// The returned weights make OWA(X) = 0 reachable iff some assignment
/// satisfies at most L clauses.
inline std::pair<ProblemInstance, WeightVector> gen_min3sat_gadget(
    const std::vector<std::vector<int>> &clauses, int L, Min3SatVariant variant, Cost rho = 1) {
  const int m = static_cast<int>(clauses.size());
  if (m < 1) throw ParameterError("gen_min3sat_gadget: empty formula");
  if (L < 0 || L > m) throw ParameterError("gen_min3sat_gadget: L outside [0,m]");
  if (rho < 1) throw ParameterError("gen_min3sat_gadget: rho >= 1 required");
  int nv = 0;
  for (const auto &cl : clauses) {
    if (cl.empty() || cl.size() > 3)
      throw ParameterError("gen_min3sat_gadget: clause size outside [1,3]");
    for (int lit : cl) {
      if (lit == 0) throw ParameterError("gen_min3sat_gadget: literal 0");
      nv = std::max(nv, std::abs(lit));
    }
  }

  // literal lit -> element: +i -> e_i (index i-1), -i -> f_i (index nv+i-1)
  auto literal_element = [&](int lit) { return lit > 0 ? lit - 1 : nv + (-lit) - 1; };

  const int n_elems = 2 * nv;
  const Cost big = (variant == Min3SatVariant::Positive)
                       ? static_cast<Cost>(nv + 1) * (m - L) * rho
                       : 1;
  const Cost base = (variant == Min3SatVariant::Positive) ? 1 : 0;

  std::vector<std::vector<Cost>> costs(m, std::vector<Cost>(n_elems, base));
  for (int j = 0; j < m; ++j)
    for (int lit : clauses[j]) costs[j][literal_element(lit)] = big;

  std::vector<double> w;
  switch (variant) {
    case Min3SatVariant::Nondecreasing:
    case Min3SatVariant::Positive: {
      if (L >= m)
        throw ParameterError("gen_min3sat_gadget: L < m required for this variant");
      w.assign(m, 0.0);
      for (int j = L; j < m; ++j) w[j] = 1.0 / (m - L);
      break;
    }
    case Min3SatVariant::Median: {
      // pad so that the single unit weight sits at the median index
      if (L < m / 2) {
        costs.insert(costs.end(), m - 2 * L, std::vector<Cost>(n_elems, 1));
        w.assign(2 * m - 2 * L, 0.0);
        w[m - L] = 1.0;  // position m-L+1, 1-based
      } else {
        if (2 * L > m) costs.insert(costs.end(), 2 * L - m, std::vector<Cost>(n_elems, 0));
        w.assign(std::max(m, 2 * L), 0.0);
        w[L] = 1.0;  // position L+1, 1-based
      }
      break;
    }
  }

  ProblemInstance inst;
  inst.kind = Kind::ShortestPath;
  inst.structure = detail::parallel_chain(nv);
  const int K = static_cast<int>(costs.size());
  inst.scenarios = ScenarioSet(n_elems, K, std::move(costs));
  inst.validate();
  return {std::move(inst), WeightVector(std::move(w))};
}

/// Appends an all-zero scenario: for every feasible X, the Hurwicz(alpha)
/// OWA of the lifted instance equals alpha times the min-max value on the
/// base.
inline ProblemInstance gen_hurwicz_lift(const ProblemInstance &base) {
  ProblemInstance inst = base;
  inst.scenarios.costs.emplace_back(base.n(), 0);
  inst.scenarios.K = base.K() + 1;
  inst.validate();
  return inst;
}

/// Shape parameters for seeded random instances. Only the fields of the
/// requested kind are read.
struct RandomShape {
  int n = 6, p = 3;           // selection
  int layers = 2, width = 2;  // shortest path (layered DAG)
  int vertices = 4;           // spanning tree (complete graph)
  int size = 3;               // assignment (complete bipartite)
  int middle = 3;             // st-cut (parallel two-arc paths)
};

namespace detail {

/// splitmix64; fixed here so instances are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  Cost cost(Cost max) { return max <= 0 ? 0 : static_cast<Cost>(next() % (max + 1)); }

private:
  std::uint64_t state_;
};

} // namespace detail

/// Seed-reproducible random instance of the requested kind with uniform
/// integer costs in [0, cost_max].
inline ProblemInstance gen_random(Kind kind, const RandomShape &shape, int K, Cost cost_max,
                                  std::uint64_t seed) {
  if (K < 1) throw ParameterError("gen_random: K >= 1 required");
  if (cost_max < 0) throw ParameterError("gen_random: cost_max >= 0 required");
  ProblemInstance inst;
  inst.kind = kind;
  int n = 0;
  switch (kind) {
    case Kind::Selection: {
      if (shape.n < 1 || shape.p < 1 || shape.p > shape.n)
        throw ParameterError("gen_random: selection needs 0 < p <= n");
      n = shape.n;
      inst.structure = SelectionStructure{shape.p};
      break;
    }
    case Kind::ShortestPath: {
      if (shape.layers < 1 || shape.width < 1)
        throw ParameterError("gen_random: layers/width >= 1 required");
      DigraphStructure g;
      const int L = shape.layers, W = shape.width;
      g.num_vertices = 2 + L * W;
      g.s = 0;
      g.t = 1 + L * W;
      auto vid = [&](int l, int k) { return 1 + l * W + k; };
      int e = 0;
      for (int k = 0; k < W; ++k) g.arcs.push_back({g.s, vid(0, k), e++});
      for (int l = 0; l + 1 < L; ++l)
        for (int k = 0; k < W; ++k)
          for (int k2 = 0; k2 < W; ++k2) g.arcs.push_back({vid(l, k), vid(l + 1, k2), e++});
      for (int k = 0; k < W; ++k) g.arcs.push_back({vid(L - 1, k), g.t, e++});
      n = e;
      inst.structure = std::move(g);
      break;
    }
    case Kind::SpanningTree: {
      if (shape.vertices < 2) throw ParameterError("gen_random: vertices >= 2 required");
      GraphStructure g;
      g.num_vertices = shape.vertices;
      int e = 0;
      for (int u = 0; u < shape.vertices; ++u)
        for (int v = u + 1; v < shape.vertices; ++v) g.edges.push_back({u, v, e++});
      n = e;
      inst.structure = std::move(g);
      break;
    }
    case Kind::Assignment: {
      if (shape.size < 1) throw ParameterError("gen_random: size >= 1 required");
      BipartiteStructure g;
      g.size = shape.size;
      int e = 0;
      for (int l = 0; l < shape.size; ++l)
        for (int r = 0; r < shape.size; ++r) g.edges.push_back({l, r, e++});
      n = e;
      inst.structure = std::move(g);
      break;
    }
    case Kind::STCut: {
      if (shape.middle < 1) throw ParameterError("gen_random: middle >= 1 required");
      DigraphStructure g;
      g.num_vertices = shape.middle + 2;
      g.s = 0;
      g.t = 1;
      int e = 0;
      for (int i = 0; i < shape.middle; ++i) {
        g.arcs.push_back({0, 2 + i, e++});
        g.arcs.push_back({2 + i, 1, e++});
      }
      n = e;
      inst.structure = std::move(g);
      break;
    }
  }
  detail::Rng rng(seed);
  std::vector<std::vector<Cost>> costs(K, std::vector<Cost>(n));
  for (int j = 0; j < K; ++j)
    for (int i = 0; i < n; ++i) costs[j][i] = rng.cost(cost_max);
  inst.scenarios = ScenarioSet(n, K, std::move(costs));
  inst.validate();
  return inst;
}

} // namespace owa

#endif

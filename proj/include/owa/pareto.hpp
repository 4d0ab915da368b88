/**
 * @file pareto.hpp
 * @brief Exact cost-vector queries and the (1+eps)-approximate Pareto set
 *        behind the FPTAS.
 *
 * Both operations run a stage-wise dynamic program over partial cost
 * vectors: one stage per element for selection, one per vertex layer for
 * acyclic shortest path. The Pareto construction trims states into
 * geometric buckets of ratio delta with (1+delta)^D <= 1+eps, D the
 * number of stages, which preserves every feasible cost vector within a
 * coordinatewise factor (1+eps).
 */

#ifndef OWA_PARETO_HPP
#define OWA_PARETO_HPP

#include <cmath>
#include <map>

#include "owa/algorithms.hpp"

namespace owa {

/// Live-state ceiling for the dynamic programs; exceeded => BudgetError.
inline constexpr long long kDpBudget = 10'000'000;

/// A per-scenario cost vector together with the solution generating it.
struct CostVector {
  std::vector<Cost> values;
  Solution solution;
};

struct ParetoSet {
  std::vector<CostVector> members;
  double epsilon = 0.0;
};

namespace detail {

inline void require_pareto_kind(const ProblemInstance &inst) {
  if (inst.kind != Kind::Selection && inst.kind != Kind::ShortestPath)
    throw CapabilityError("pareto: supported kinds are selection and acyclic shortest-path");
}

/// Topological order of a DAG; throws CapabilityError on a cycle.
inline std::vector<int> topo_order(const DigraphStructure &g) {
  std::vector<int> indeg(g.num_vertices, 0);
  for (const auto &a : g.arcs) ++indeg[a.to];
  std::vector<int> order;
  std::vector<int> q;
  for (int v = 0; v < g.num_vertices; ++v)
    if (indeg[v] == 0) q.push_back(v);
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    order.push_back(v);
    for (const auto &a : g.arcs)
      if (a.from == v && --indeg[a.to] == 0) q.push_back(a.to);
  }
  if (static_cast<int>(order.size()) != g.num_vertices)
    throw CapabilityError("pareto: shortest-path graph must be acyclic");
  return order;
}

/// Longest s-t path length in arcs (the DP stage count for trimming).
inline int longest_path_arcs(const DigraphStructure &g, const std::vector<int> &order) {
  std::vector<int> dist(g.num_vertices, -1);
  dist[g.s] = 0;
  for (int v : order) {
    if (dist[v] < 0) continue;
    for (const auto &a : g.arcs)
      if (a.from == v) dist[a.to] = std::max(dist[a.to], dist[v] + 1);
  }
  if (dist[g.t] < 0) throw InfeasibleError("pareto: t unreachable from s");
  return dist[g.t];
}

inline long long bucket_of(Cost x, double delta) {
  if (x == 0) return -1;  // zero keeps its own bucket
  return static_cast<long long>(std::floor(std::log(static_cast<double>(x)) /
                                               std::log1p(delta) +
                                           1e-12));
}

inline std::vector<long long> bucket_key(const std::vector<Cost> &v, double delta) {
  std::vector<long long> key(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) key[j] = bucket_of(v[j], delta);
  return key;
}

struct DpState {
  std::vector<Cost> vec;
  std::vector<int> elems;
};

} // namespace detail

/// Is there a solution whose cost equals `v` in every scenario?
/// Returns a witness or nothing. Pseudopolynomial DP; only selection and
/// acyclic shortest-path are supported.
inline std::optional<Solution> exact_vector_query(const ProblemInstance &inst,
                                                  const std::vector<Cost> &v) {
  detail::require_pareto_kind(inst);
  if (static_cast<int>(v.size()) != inst.K())
    throw DimensionError("exact_vector_query: target length != K");
  const int K = inst.K();
  auto fits = [&](const std::vector<Cost> &partial) {
    for (int j = 0; j < K; ++j)
      if (partial[j] > v[j]) return false;
    return true;
  };
  auto column = [&](int i) {
    std::vector<Cost> col(K);
    for (int j = 0; j < K; ++j) col[j] = inst.scenarios.costs[j][i];
    return col;
  };
  auto add = [&](const std::vector<Cost> &a, const std::vector<Cost> &b) {
    std::vector<Cost> s(K);
    for (int j = 0; j < K; ++j) s[j] = a[j] + b[j];
    return s;
  };

  if (inst.kind == Kind::Selection) {
    const int p = inst.selection().p;
    // states[c]: partial vectors reachable with c chosen elements
    std::vector<std::map<std::vector<Cost>, std::vector<int>>> states(p + 1);
    states[0][std::vector<Cost>(K, 0)] = {};
    long long live = 1;
    for (int i = 0; i < inst.n(); ++i) {
      for (int c = std::min(i, p - 1); c >= 0; --c) {
        for (const auto &[vec, elems] : states[c]) {
          auto nv = add(vec, column(i));
          if (!fits(nv)) continue;
          auto [it, inserted] = states[c + 1].try_emplace(std::move(nv), elems);
          if (inserted) {
            it->second.push_back(i);
            if (++live > kDpBudget) throw BudgetError("exact_vector_query: DP budget exceeded");
          }
        }
      }
    }
    auto it = states[p].find(v);
    if (it == states[p].end()) return std::nullopt;
    return Solution(it->second);
  }

  // acyclic shortest path
  const auto &g = inst.digraph();
  auto order = detail::topo_order(g);
  std::vector<std::map<std::vector<Cost>, std::vector<int>>> states(g.num_vertices);
  states[g.s][std::vector<Cost>(K, 0)] = {};
  long long live = 1;
  for (int u : order) {
    for (const auto &[vec, elems] : states[u]) {
      for (const auto &a : g.arcs) {
        if (a.from != u) continue;
        auto nv = add(vec, column(a.element));
        if (!fits(nv)) continue;
        auto [it, inserted] = states[a.to].try_emplace(std::move(nv), elems);
        if (inserted) {
          it->second.push_back(a.element);
          if (++live > kDpBudget) throw BudgetError("exact_vector_query: DP budget exceeded");
        }
      }
    }
  }
  auto it = states[g.t].find(v);
  if (it == states[g.t].end()) return std::nullopt;
  return Solution(it->second);
}

/// (1+eps)-approximate Pareto set: every feasible solution is dominated
/// coordinatewise within factor (1+eps) by some member.
inline ParetoSet approximate_pareto_set(const ProblemInstance &inst, double epsilon) {
  detail::require_pareto_kind(inst);
  if (epsilon <= 0.0) throw ParameterError("approximate_pareto_set: epsilon > 0 required");
  const int K = inst.K();
  auto column = [&](int i) {
    std::vector<Cost> col(K);
    for (int j = 0; j < K; ++j) col[j] = inst.scenarios.costs[j][i];
    return col;
  };
  auto add = [&](const std::vector<Cost> &a, const std::vector<Cost> &b) {
    std::vector<Cost> s(K);
    for (int j = 0; j < K; ++j) s[j] = a[j] + b[j];
    return s;
  };

  std::vector<detail::DpState> finals;

  if (inst.kind == Kind::Selection) {
    const int p = inst.selection().p;
    const int stages = inst.n();
    const double delta = std::pow(1.0 + epsilon, 1.0 / stages) - 1.0;
    using Key = std::pair<int, std::vector<long long>>;
    std::map<Key, detail::DpState> states;
    states[{0, detail::bucket_key(std::vector<Cost>(K, 0), delta)}] = {
        std::vector<Cost>(K, 0), {}};
    for (int i = 0; i < inst.n(); ++i) {
      std::map<Key, detail::DpState> next = states;  // skip branch
      for (const auto &[key, st] : states) {
        if (key.first == p) continue;
        detail::DpState ns{add(st.vec, column(i)), st.elems};
        ns.elems.push_back(i);
        Key nk{key.first + 1, detail::bucket_key(ns.vec, delta)};
        next.try_emplace(std::move(nk), std::move(ns));  // keep-first per cell
      }
      if (static_cast<long long>(next.size()) > kDpBudget)
        throw BudgetError("approximate_pareto_set: DP budget exceeded");
      states = std::move(next);
    }
    for (const auto &[key, st] : states)
      if (key.first == p) finals.push_back(st);
  } else {
    const auto &g = inst.digraph();
    auto order = detail::topo_order(g);
    const int stages = std::max(1, detail::longest_path_arcs(g, order));
    const double delta = std::pow(1.0 + epsilon, 1.0 / stages) - 1.0;
    std::vector<std::map<std::vector<long long>, detail::DpState>> states(g.num_vertices);
    states[g.s][detail::bucket_key(std::vector<Cost>(K, 0), delta)] = {std::vector<Cost>(K, 0),
                                                                       {}};
    long long live = 1;
    for (int u : order) {
      for (const auto &[key, st] : states[u]) {
        for (const auto &a : g.arcs) {
          if (a.from != u) continue;
          detail::DpState ns{add(st.vec, column(a.element)), st.elems};
          ns.elems.push_back(a.element);
          auto nk = detail::bucket_key(ns.vec, delta);
          auto [it, inserted] = states[a.to].try_emplace(std::move(nk), std::move(ns));
          if (inserted && ++live > kDpBudget)
            throw BudgetError("approximate_pareto_set: DP budget exceeded");
        }
      }
    }
    for (const auto &[key, st] : states[g.t]) finals.push_back(st);
  }

  // drop members exactly dominated by an earlier or equal member
  ParetoSet result;
  result.epsilon = epsilon;
  auto dominates = [&](const std::vector<Cost> &a, const std::vector<Cost> &b) {
    for (int j = 0; j < K; ++j)
      if (a[j] > b[j]) return false;
    return true;
  };
  for (std::size_t i = 0; i < finals.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < finals.size() && keep; ++j) {
      if (i == j) continue;
      if (dominates(finals[j].vec, finals[i].vec) &&
          (finals[j].vec != finals[i].vec || j < i))
        keep = false;
    }
    if (keep) result.members.push_back({finals[i].vec, Solution(finals[i].elems)});
  }
  return result;
}

/// FPTAS: the minimum-OWA member of the (1+eps)-Pareto set is within
/// factor (1+eps) of the optimum, by monotonicity of OWA.
inline AlgorithmReport fptas_min_owa(const ProblemInstance &inst, const WeightVector &w,
                                     double epsilon) {
  detail::Stopwatch sw;
  if (w.size() != inst.K()) throw DimensionError("fptas_min_owa: weight length != K");
  ParetoSet ps = approximate_pareto_set(inst, epsilon);
  if (ps.members.empty()) throw InfeasibleError("fptas_min_owa: empty feasible set");
  const CostVector *best = nullptr;
  double best_val = 0.0;
  for (const auto &m : ps.members) {
    double val = owa_value(m.values, w);
    if (!best || val < best_val - kTol) {
      best = &m;
      best_val = val;
    }
  }
  return detail::make_report(inst, best->solution, w,
                             Certificate{1.0 + epsilon, "fptas"}, sw);
}

} // namespace owa

#endif

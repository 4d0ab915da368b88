/**
 * @file algorithms.hpp
 * @brief Exact and approximation algorithms for minimizing the OWA of
 *        per-scenario solution costs, with machine-checkable ratio
 *        certificates.
 *
 * Certified ratios:
 *  - aggregation with nonincreasing weights: w_1 * K (tight)
 *  - Hurwicz top-two aggregation, alpha in [1/2,1]: alpha*K + (1-alpha)*(K-2)
 *  - Hurwicz via a gamma-approximate min-max solver: gamma (when alpha = 1
 *    or the returned solution has a zero-cost scenario), else gamma/alpha
 *  - quantile enumeration over C(K, k-1) min-max subproblems: gamma of the
 *    inner solver
 * Min-min, min-average, the two-scenario algorithm (alpha <= 1/2) and
 * quantile enumeration with an exact inner solver are exact.
 */

#ifndef OWA_ALGORITHMS_HPP
#define OWA_ALGORITHMS_HPP

#include <chrono>
#include <optional>
#include <string>

#include "owa/problems.hpp"

namespace owa {

struct Certificate {
  double claimed_ratio = 1.0;
  std::string basis;  // "exact", "w1K", "hurwicz-top2", "gamma", "gamma-over-alpha", ...
};

struct AlgorithmReport {
  Solution solution;
  double owa = 0.0;
  std::vector<Cost> scenario_costs;
  std::optional<Certificate> certificate;
  double elapsed_ms = 0.0;
};

namespace detail {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline AlgorithmReport make_report(const ProblemInstance &inst, Solution x,
                                   const WeightVector &w, std::optional<Certificate> cert,
                                   const Stopwatch &sw) {
  AlgorithmReport r;
  r.scenario_costs = scenario_costs_of(inst, x);
  r.owa = owa_value(r.scenario_costs, w);
  r.solution = std::move(x);
  r.certificate = std::move(cert);
  r.elapsed_ms = sw.ms();
  return r;
}

/// Per-element costs sorted nonincreasingly over scenarios.
inline std::vector<std::vector<Cost>> sorted_element_costs(const ProblemInstance &inst) {
  std::vector<std::vector<Cost>> sorted(inst.n(), std::vector<Cost>(inst.K()));
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = 0; j < inst.K(); ++j) sorted[i][j] = inst.scenarios.costs[j][i];
    std::sort(sorted[i].begin(), sorted[i].end(), std::greater<>());
  }
  return sorted;
}

} // namespace detail

/// Oracle: globally optimal OWA by full enumeration of the feasible set.
/// First solution attaining the minimum wins (enumeration order is fixed).
inline AlgorithmReport brute_force_owa(const ProblemInstance &inst, const WeightVector &w,
                                       long long limit = 5000) {
  detail::Stopwatch sw;
  if (w.size() != inst.K()) throw DimensionError("brute_force_owa: weight length != K");
  std::optional<Solution> best;
  double best_owa = 0.0;
  for_each_feasible(inst, limit, [&](const Solution &x) {
    double val = owa_value(scenario_costs_of(inst, x), w);
    if (!best || val < best_owa - kTol) {
      best = x;
      best_owa = val;
    }
  });
  if (!best) throw InfeasibleError("brute_force_owa: empty feasible set");
  return detail::make_report(inst, *best, w, Certificate{1.0, "exact"}, sw);
}

/// Exact for uniform weights: solve the deterministic problem on
/// scenario-averaged costs.
inline AlgorithmReport solve_min_average(const ProblemInstance &inst) {
  detail::Stopwatch sw;
  std::vector<double> agg(inst.n(), 0.0);
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = 0; j < inst.K(); ++j) agg[i] += static_cast<double>(inst.scenarios.costs[j][i]);
    agg[i] /= inst.K();
  }
  Solution x = solve_deterministic_real(inst, agg);
  return detail::make_report(inst, std::move(x), preset_weights(WeightClass::average(), inst.K()),
                             Certificate{1.0, "exact"}, sw);
}

/// Exact for minimum weights: best single-scenario optimum.
inline AlgorithmReport solve_min_min(const ProblemInstance &inst) {
  detail::Stopwatch sw;
  std::optional<Solution> best;
  double best_val = 0.0;
  for (int j = 0; j < inst.K(); ++j) {
    std::vector<double> row(inst.scenarios.costs[j].begin(), inst.scenarios.costs[j].end());
    Solution xj = solve_deterministic_real(inst, row);
    double val = 0.0;
    for (int e : xj.elements) val += static_cast<double>(inst.scenarios.costs[j][e]);
    if (!best || val < best_val - kTol) {
      best = std::move(xj);
      best_val = val;
    }
  }
  return detail::make_report(inst, *best, preset_weights(WeightClass::minimum(), inst.K()),
                             Certificate{1.0, "exact"}, sw);
}

/// K-approximation for maximum weights: aggregate each element by its
/// worst-scenario cost and solve once.
inline AlgorithmReport solve_minmax_aggregate(const ProblemInstance &inst) {
  detail::Stopwatch sw;
  std::vector<double> agg(inst.n(), 0.0);
  for (int i = 0; i < inst.n(); ++i)
    for (int j = 0; j < inst.K(); ++j)
      agg[i] = std::max(agg[i], static_cast<double>(inst.scenarios.costs[j][i]));
  Solution x = solve_deterministic_real(inst, agg);
  return detail::make_report(inst, std::move(x), preset_weights(WeightClass::maximum(), inst.K()),
                             Certificate{static_cast<double>(inst.K()), "w1K"}, sw);
}

/// Exact algorithm for K = 2 and alpha in [0, 1/2]: the better of the two
/// blend minimizers is optimal. Callers with alpha > 1/2 should use
/// solve_hurwicz_top2 (a 2*alpha-approximation there).
inline AlgorithmReport solve_two_scenario_owa(const ProblemInstance &inst, double alpha) {
  detail::Stopwatch sw;
  if (inst.K() != 2) throw ParameterError("two-scenario algorithm requires K = 2");
  if (alpha < -kTol || alpha > 0.5 + kTol)
    throw ParameterError("two-scenario algorithm requires alpha in [0, 1/2]");
  const auto &c1 = inst.scenarios.costs[0];
  const auto &c2 = inst.scenarios.costs[1];
  std::vector<double> blend1(inst.n()), blend2(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    blend1[i] = alpha * static_cast<double>(c2[i]) + (1.0 - alpha) * static_cast<double>(c1[i]);
    blend2[i] = alpha * static_cast<double>(c1[i]) + (1.0 - alpha) * static_cast<double>(c2[i]);
  }
  WeightVector w = preset_weights(WeightClass::hurwicz(alpha), 2);
  Solution x1 = solve_deterministic_real(inst, blend1);
  Solution x2 = solve_deterministic_real(inst, blend2);
  double v1 = owa_value(scenario_costs_of(inst, x1), w);
  double v2 = owa_value(scenario_costs_of(inst, x2), w);
  Solution best = (v2 < v1 - kTol) ? std::move(x2) : std::move(x1);
  return detail::make_report(inst, std::move(best), w, Certificate{1.0, "exact"}, sw);
}

/// Hook for an inexact deterministic solver with a declared worst-case
/// ratio; the exact built-in solver has gamma = 1.
struct DeterministicSolver {
  std::function<Solution(const ProblemInstance &, const std::vector<double> &)> solve =
      [](const ProblemInstance &inst, const std::vector<double> &c) {
        return solve_deterministic_real(inst, c);
      };
  double gamma = 1.0;
};

/// Aggregation algorithm: per-element OWA of the sorted costs, one
/// deterministic solve. Certified within w_1 * gamma * K when the weights
/// are nonincreasing; otherwise an uncertified heuristic.
inline AlgorithmReport solve_owa_aggregate(const ProblemInstance &inst, const WeightVector &w,
                                           const DeterministicSolver &det = {}) {
  detail::Stopwatch sw;
  if (w.size() != inst.K()) throw DimensionError("solve_owa_aggregate: weight length != K");
  auto sorted = detail::sorted_element_costs(inst);
  std::vector<double> agg(inst.n(), 0.0);
  for (int i = 0; i < inst.n(); ++i)
    for (int j = 0; j < inst.K(); ++j) agg[i] += w[j] * static_cast<double>(sorted[i][j]);
  Solution x = det.solve(inst, agg);
  std::optional<Certificate> cert;
  if (weights_nonincreasing(w)) {
    double ratio = w[0] * det.gamma * inst.K();
    cert = Certificate{ratio, det.gamma > 1.0 ? "w1-gamma-K" : "w1K"};
  }
  return detail::make_report(inst, std::move(x), w, std::move(cert), sw);
}

/// Hurwicz aggregation over the two largest per-element costs. Certified
/// within alpha*K + (1-alpha)*(K-2) for alpha in [1/2, 1]; an uncertified
/// heuristic for alpha < 1/2.
inline AlgorithmReport solve_hurwicz_top2(const ProblemInstance &inst, double alpha) {
  detail::Stopwatch sw;
  if (inst.K() < 2) throw ParameterError("hurwicz-top2 requires K >= 2");
  if (alpha < -kTol || alpha > 1.0 + kTol)
    throw ParameterError("hurwicz-top2: alpha outside [0,1]");
  auto sorted = detail::sorted_element_costs(inst);
  std::vector<double> agg(inst.n());
  for (int i = 0; i < inst.n(); ++i)
    agg[i] = alpha * static_cast<double>(sorted[i][0]) +
             (1.0 - alpha) * static_cast<double>(sorted[i][1]);
  Solution x = solve_deterministic_real(inst, agg);
  std::optional<Certificate> cert;
  if (alpha >= 0.5 - kTol) {
    double ratio = alpha * inst.K() + (1.0 - alpha) * (inst.K() - 2);
    cert = Certificate{ratio, "hurwicz-top2"};
  }
  return detail::make_report(inst, std::move(x),
                             preset_weights(WeightClass::hurwicz(alpha), inst.K()),
                             std::move(cert), sw);
}

/// Handle to a min-max solver with a per-instance worst-case ratio.
struct MinMaxSolver {
  std::function<AlgorithmReport(const ProblemInstance &)> run;
  std::function<double(const ProblemInstance &)> gamma;
};

inline MinMaxSolver exact_minmax_solver(long long limit = 5000) {
  return {[limit](const ProblemInstance &inst) {
            return brute_force_owa(inst, preset_weights(WeightClass::maximum(), inst.K()), limit);
          },
          [](const ProblemInstance &) { return 1.0; }};
}

inline MinMaxSolver aggregate_minmax_solver() {
  return {[](const ProblemInstance &inst) { return solve_minmax_aggregate(inst); },
          [](const ProblemInstance &inst) { return static_cast<double>(inst.K()); }};
}

/// Reduction to one min-max solve: certified within gamma when alpha = 1
/// or the solution is free under some scenario, else gamma/alpha.
inline AlgorithmReport solve_hurwicz_via_minmax(const ProblemInstance &inst, double alpha,
                                                const MinMaxSolver &inner) {
  detail::Stopwatch sw;
  if (alpha <= kTol || alpha > 1.0 + kTol)
    throw ParameterError("hurwicz-via-minmax: alpha outside (0,1]");
  AlgorithmReport inner_report = inner.run(inst);
  double g = inner.gamma(inst);
  std::vector<Cost> sc = scenario_costs_of(inst, inner_report.solution);
  Cost min_cost = *std::min_element(sc.begin(), sc.end());
  Certificate cert;
  if (std::abs(alpha - 1.0) <= kTol || min_cost == 0)
    cert = {g, "gamma"};
  else
    cert = {g / alpha, "gamma-over-alpha"};
  return detail::make_report(inst, std::move(inner_report.solution),
                             preset_weights(WeightClass::hurwicz(alpha), inst.K()),
                             std::move(cert), sw);
}

/// Minimize the k-th largest scenario cost by solving min-max on every
/// scenario subset of size K - k + 1. Exact with an exact inner solver.
inline AlgorithmReport solve_quantile_enum(const ProblemInstance &inst, int k,
                                           const MinMaxSolver &inner,
                                           long long budget = 100000) {
  detail::Stopwatch sw;
  const int K = inst.K();
  if (k < 1 || k > K) throw ParameterError("quantile-enum: k outside [1,K]");
  // C(K, k-1) subproblems
  double binom = 1.0;
  for (int i = 1; i <= k - 1; ++i) binom = binom * (K - i + 1) / i;
  if (binom > static_cast<double>(budget))
    throw BudgetError("quantile-enum: C(K,k-1) exceeds budget");

  WeightVector w = preset_weights(WeightClass::quantile(k), K);
  std::optional<Solution> best;
  double best_val = 0.0, worst_gamma = 1.0;

  std::vector<int> drop;  // scenarios excluded from the min-max subproblem
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(drop.size()) == k - 1) {
      ProblemInstance sub = inst;
      sub.scenarios.costs.clear();
      std::vector<char> dropped(K, 0);
      for (int j : drop) dropped[j] = 1;
      for (int j = 0; j < K; ++j)
        if (!dropped[j]) sub.scenarios.costs.push_back(inst.scenarios.costs[j]);
      sub.scenarios.K = K - (k - 1);
      AlgorithmReport r = inner.run(sub);
      worst_gamma = std::max(worst_gamma, inner.gamma(sub));
      double val = owa_value(scenario_costs_of(inst, r.solution), w);
      if (!best || val < best_val - kTol) {
        best = std::move(r.solution);
        best_val = val;
      }
      return;
    }
    for (int j = start; j < K; ++j) {
      drop.push_back(j);
      rec(j + 1);
      drop.pop_back();
    }
  };
  rec(0);

  Certificate cert = (worst_gamma <= 1.0 + kTol) ? Certificate{1.0, "exact"}
                                                 : Certificate{worst_gamma, "quantile-gamma"};
  return detail::make_report(inst, *best, w, std::move(cert), sw);
}

} // namespace owa

#endif

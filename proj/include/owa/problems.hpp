/**
 * @file problems.hpp
 * @brief The deterministic base problems: shortest path, spanning tree,
 *        item selection, assignment and s-t cut.
 *
 * Each instance couples a combinatorial structure with a scenario set.
 * The module provides an exact solver for a single cost vector, a
 * feasibility test, and exhaustive enumeration of the feasible set for
 * oracle use.
 */

#ifndef OWA_PROBLEMS_HPP
#define OWA_PROBLEMS_HPP

#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <variant>
#include <vector>

#include "owa/core.hpp"

namespace owa {

enum class Kind { ShortestPath, SpanningTree, Selection, Assignment, STCut };

inline const char *kind_name(Kind k) {
  switch (k) {
    case Kind::ShortestPath: return "shortest-path";
    case Kind::SpanningTree: return "spanning-tree";
    case Kind::Selection: return "selection";
    case Kind::Assignment: return "assignment";
    case Kind::STCut: return "st-cut";
  }
  return "?";
}

/// Directed arc carrying a ground-set element index. Parallel arcs are
/// allowed; each carries its own element.
struct Arc {
  int from = 0, to = 0, element = 0;
  bool operator==(const Arc &) const = default;
};

/// Undirected edge for spanning-tree instances.
struct Edge {
  int u = 0, v = 0, element = 0;
  bool operator==(const Edge &) const = default;
};

struct BipartiteEdge {
  int left = 0, right = 0, element = 0;
  bool operator==(const BipartiteEdge &) const = default;
};

struct SelectionStructure {
  int p = 0;
  bool operator==(const SelectionStructure &) const = default;
};

struct DigraphStructure {
  int num_vertices = 0;
  int s = 0, t = 0;
  std::vector<Arc> arcs;
  bool operator==(const DigraphStructure &) const = default;
};

struct GraphStructure {
  int num_vertices = 0;
  std::vector<Edge> edges;
  bool operator==(const GraphStructure &) const = default;
};

struct BipartiteStructure {
  int size = 0;  ///< vertices per side
  std::vector<BipartiteEdge> edges;
  bool operator==(const BipartiteStructure &) const = default;
};

using Structure =
    std::variant<SelectionStructure, DigraphStructure, GraphStructure, BipartiteStructure>;

struct ProblemInstance {
  Kind kind = Kind::Selection;
  Structure structure;
  ScenarioSet scenarios;

  int n() const { return scenarios.n; }
  int K() const { return scenarios.K; }

  const SelectionStructure &selection() const { return std::get<SelectionStructure>(structure); }
  const DigraphStructure &digraph() const { return std::get<DigraphStructure>(structure); }
  const GraphStructure &graph() const { return std::get<GraphStructure>(structure); }
  const BipartiteStructure &bipartite() const { return std::get<BipartiteStructure>(structure); }

  bool operator==(const ProblemInstance &) const = default;

  /// Checks structure/scenario consistency: every element index in
  /// [0, n) used exactly once, vertex indices in range, 0 < p <= n.
  void validate() const {
    scenarios.validate();
    std::vector<int> seen(n(), 0);
    auto mark = [&](int e) {
      if (e < 0 || e >= n()) throw ParameterError("element index out of range");
      if (seen[e]++) throw ParameterError("element index used twice");
    };
    switch (kind) {
      case Kind::Selection: {
        const auto &st = selection();
        if (st.p <= 0 || st.p > n()) throw ParameterError("selection: 0 < p <= n required");
        return;  // all elements are the ground set, nothing to mark
      }
      case Kind::ShortestPath:
      case Kind::STCut: {
        const auto &st = digraph();
        if (st.s < 0 || st.s >= st.num_vertices || st.t < 0 || st.t >= st.num_vertices)
          throw ParameterError("digraph: s/t out of range");
        for (const auto &a : st.arcs) {
          if (a.from < 0 || a.from >= st.num_vertices || a.to < 0 || a.to >= st.num_vertices)
            throw ParameterError("digraph: vertex out of range");
          mark(a.element);
        }
        break;
      }
      case Kind::SpanningTree: {
        const auto &st = graph();
        for (const auto &e : st.edges) {
          if (e.u < 0 || e.u >= st.num_vertices || e.v < 0 || e.v >= st.num_vertices)
            throw ParameterError("graph: vertex out of range");
          mark(e.element);
        }
        break;
      }
      case Kind::Assignment: {
        const auto &st = bipartite();
        for (const auto &e : st.edges) {
          if (e.left < 0 || e.left >= st.size || e.right < 0 || e.right >= st.size)
            throw ParameterError("bipartite: vertex out of range");
          mark(e.element);
        }
        break;
      }
    }
    for (int e = 0; e < n(); ++e)
      if (!seen[e]) throw ParameterError("element index unused by structure");
  }
};

namespace detail {

class DisjointSet {
public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<int> parent_;
};

inline constexpr double kInf = 1e30;

/// Dijkstra on a multigraph; returns the arc elements of a shortest
/// s-t path. Arcs are relaxed in index order, strict improvement only,
/// so the result is seed-free deterministic.
inline Solution shortest_path(const DigraphStructure &g, const std::vector<double> &cost) {
  const int V = g.num_vertices;
  std::vector<std::vector<int>> adj(V);
  for (int a = 0; a < static_cast<int>(g.arcs.size()); ++a)
    adj[g.arcs[a].from].push_back(a);

  std::vector<double> dist(V, kInf);
  std::vector<int> pred(V, -1);  // arc index into the vertex
  using QE = std::pair<double, int>;
  std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
  dist[g.s] = 0.0;
  pq.push({0.0, g.s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (int ai : adj[v]) {
      const Arc &a = g.arcs[ai];
      double nd = d + cost[a.element];
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        pred[a.to] = ai;
        pq.push({nd, a.to});
      }
    }
  }
  if (dist[g.t] >= kInf) throw InfeasibleError("shortest path: t unreachable from s");
  std::vector<int> elems;
  for (int v = g.t; v != g.s; v = g.arcs[pred[v]].from) elems.push_back(g.arcs[pred[v]].element);
  return Solution(std::move(elems));
}

/// Kruskal with (cost, element) ordering.
inline Solution spanning_tree(const GraphStructure &g, const std::vector<double> &cost) {
  std::vector<int> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    double ca = cost[g.edges[a].element], cb = cost[g.edges[b].element];
    if (ca != cb) return ca < cb;
    return g.edges[a].element < g.edges[b].element;
  });
  DisjointSet dsu(g.num_vertices);
  std::vector<int> elems;
  for (int ei : order)
    if (dsu.unite(g.edges[ei].u, g.edges[ei].v)) elems.push_back(g.edges[ei].element);
  if (static_cast<int>(elems.size()) != g.num_vertices - 1)
    throw InfeasibleError("spanning tree: graph not connected");
  return Solution(std::move(elems));
}

/// Minimum-cost perfect matching by shortest augmenting paths with
/// potentials. Parallel edges are reduced to the cheapest element per
/// vertex pair (ties: smallest element index).
inline Solution assignment(const BipartiteStructure &g, const std::vector<double> &cost) {
  const int m = g.size;
  std::vector<std::vector<double>> a(m + 1, std::vector<double>(m + 1, kInf));
  std::vector<std::vector<int>> elem(m + 1, std::vector<int>(m + 1, -1));
  for (const auto &e : g.edges) {
    double c = cost[e.element];
    int i = e.left + 1, j = e.right + 1;
    if (c < a[i][j] || (c == a[i][j] && e.element < elem[i][j])) {
      a[i][j] = c;
      elem[i][j] = e.element;
    }
  }
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        double cur = a[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 < 0) throw InfeasibleError("assignment: no perfect matching");
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> elems;
  for (int j = 1; j <= m; ++j) {
    if (elem[p[j]][j] < 0 || a[p[j]][j] >= kInf / 2)
      throw InfeasibleError("assignment: no perfect matching");
    elems.push_back(elem[p[j]][j]);
  }
  return Solution(std::move(elems));
}

/// Dinic max-flow; the cut set is every arc crossing the bipartition
/// (S, T) where S is residual-reachable from s. Zero-cost crossing arcs
/// belong to the cut set as well.
inline Solution st_cut(const DigraphStructure &g, const std::vector<double> &cost) {
  const int V = g.num_vertices;
  constexpr double eps = 1e-9;
  struct FlowArc {
    int to;
    double cap;
    int rev;
  };
  std::vector<std::vector<FlowArc>> adj(V);
  for (const auto &a : g.arcs) {
    adj[a.from].push_back({a.to, cost[a.element], static_cast<int>(adj[a.to].size())});
    adj[a.to].push_back({a.from, 0.0, static_cast<int>(adj[a.from].size()) - 1});
  }
  std::vector<int> level(V), it(V);
  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[g.s] = 0;
    q.push(g.s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto &fa : adj[v])
        if (fa.cap > eps && level[fa.to] < 0) {
          level[fa.to] = level[v] + 1;
          q.push(fa.to);
        }
    }
    return level[g.t] >= 0;
  };
  std::function<double(int, double)> dfs = [&](int v, double f) -> double {
    if (v == g.t) return f;
    for (int &i = it[v]; i < static_cast<int>(adj[v].size()); ++i) {
      FlowArc &fa = adj[v][i];
      if (fa.cap > eps && level[fa.to] == level[v] + 1) {
        double d = dfs(fa.to, std::min(f, fa.cap));
        if (d > eps) {
          fa.cap -= d;
          adj[fa.to][fa.rev].cap += d;
          return d;
        }
      }
    }
    return 0.0;
  };
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    while (dfs(g.s, kInf) > eps) {}
  }
  // s-side of the min cut
  std::vector<char> in_s(V, 0);
  std::queue<int> q;
  in_s[g.s] = 1;
  q.push(g.s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto &fa : adj[v])
      if (fa.cap > eps && !in_s[fa.to]) {
        in_s[fa.to] = 1;
        q.push(fa.to);
      }
  }
  if (in_s[g.t]) throw InfeasibleError("st-cut: t reachable at full residual (internal)");
  std::vector<int> elems;
  for (const auto &a : g.arcs)
    if (in_s[a.from] && !in_s[a.to]) elems.push_back(a.element);
  return Solution(std::move(elems));
}

} // namespace detail

/// Exact solver for a single real-valued cost vector. The documented
/// tie-break is the fixed iteration order of the underlying algorithm:
/// arcs/edges are scanned in element-index order throughout.
inline Solution solve_deterministic_real(const ProblemInstance &inst,
                                         const std::vector<double> &costs) {
  if (static_cast<int>(costs.size()) != inst.n())
    throw DimensionError("solve_deterministic: costs length != n");
  switch (inst.kind) {
    case Kind::Selection: {
      std::vector<int> order(inst.n());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return costs[a] < costs[b]; });
      order.resize(inst.selection().p);
      return Solution(std::move(order));
    }
    case Kind::ShortestPath: return detail::shortest_path(inst.digraph(), costs);
    case Kind::SpanningTree: return detail::spanning_tree(inst.graph(), costs);
    case Kind::Assignment: return detail::assignment(inst.bipartite(), costs);
    case Kind::STCut: return detail::st_cut(inst.digraph(), costs);
  }
  throw ParameterError("unknown kind");
}

inline Solution solve_deterministic(const ProblemInstance &inst, const std::vector<Cost> &costs) {
  for (Cost c : costs)
    if (c < 0) throw ParameterError("solve_deterministic: negative cost");
  return solve_deterministic_real(inst, std::vector<double>(costs.begin(), costs.end()));
}

/// Membership test for the feasible set.
inline bool is_feasible(const ProblemInstance &inst, const Solution &X) {
  for (int e : X.elements)
    if (e < 0 || e >= inst.n()) throw ParameterError("is_feasible: element out of range");
  std::vector<char> in(inst.n(), 0);
  for (int e : X.elements) in[e] = 1;

  switch (inst.kind) {
    case Kind::Selection:
      return static_cast<int>(X.elements.size()) == inst.selection().p;

    case Kind::ShortestPath: {
      // the arc set must form a simple s-t path
      const auto &g = inst.digraph();
      std::vector<int> out_arc(g.num_vertices, -1);
      int count = 0;
      for (int ai = 0; ai < static_cast<int>(g.arcs.size()); ++ai) {
        if (!in[g.arcs[ai].element]) continue;
        ++count;
        if (out_arc[g.arcs[ai].from] != -1) return false;  // branching
        out_arc[g.arcs[ai].from] = ai;
      }
      if (count != static_cast<int>(X.elements.size())) return false;  // element not on any arc
      std::vector<char> visited(g.num_vertices, 0);
      int v = g.s, walked = 0;
      while (v != g.t) {
        if (visited[v]) return false;
        visited[v] = 1;
        int ai = out_arc[v];
        if (ai < 0) return false;
        v = g.arcs[ai].to;
        ++walked;
      }
      if (out_arc[g.t] != -1) return false;
      return walked == count;
    }

    case Kind::SpanningTree: {
      const auto &g = inst.graph();
      if (static_cast<int>(X.elements.size()) != g.num_vertices - 1) return false;
      detail::DisjointSet dsu(g.num_vertices);
      int united = 0;
      for (const auto &e : g.edges)
        if (in[e.element]) {
          if (!dsu.unite(e.u, e.v)) return false;  // cycle
          ++united;
        }
      return united == g.num_vertices - 1;
    }

    case Kind::Assignment: {
      const auto &g = inst.bipartite();
      if (static_cast<int>(X.elements.size()) != g.size) return false;
      std::vector<char> lcov(g.size, 0), rcov(g.size, 0);
      for (const auto &e : g.edges)
        if (in[e.element]) {
          if (lcov[e.left] || rcov[e.right]) return false;
          lcov[e.left] = rcov[e.right] = 1;
        }
      for (int i = 0; i < g.size; ++i)
        if (!lcov[i] || !rcov[i]) return false;
      return true;
    }

    case Kind::STCut: {
      // X is feasible iff it is exactly the crossing set of some (S, T),
      // s in S, t in T. Close {s} union {tails of X} under non-X arcs;
      // a valid S must contain the closure, and the closure itself then
      // crosses exactly X unless a head of X (or t) got swallowed.
      const auto &g = inst.digraph();
      std::vector<char> in_s(g.num_vertices, 0);
      std::queue<int> q;
      auto add = [&](int v) {
        if (!in_s[v]) {
          in_s[v] = 1;
          q.push(v);
        }
      };
      add(g.s);
      for (const auto &a : g.arcs)
        if (in[a.element]) add(a.from);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto &a : g.arcs)
          if (a.from == v && !in[a.element]) add(a.to);
      }
      if (in_s[g.t]) return false;
      for (const auto &a : g.arcs)
        if (in[a.element] && in_s[a.to]) return false;
      return true;
    }
  }
  return false;
}

namespace detail {

using SolutionSink = std::function<void(const Solution &)>;

inline void enumerate_selection(int n, int p, long long limit, long long &count,
                                const SolutionSink &sink) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      if (++count > limit) throw EnumerationLimitError("feasible set larger than limit");
      sink(Solution(cur));
      return;
    }
    int need = p - static_cast<int>(cur.size());
    for (int i = start; i + need <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline void enumerate_paths(const DigraphStructure &g, long long limit, long long &count,
                            const SolutionSink &sink) {
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (int ai = 0; ai < static_cast<int>(g.arcs.size()); ++ai)
    adj[g.arcs[ai].from].push_back(ai);
  std::vector<char> visited(g.num_vertices, 0);
  std::vector<int> elems;
  std::function<void(int)> rec = [&](int v) {
    if (v == g.t) {
      if (++count > limit) throw EnumerationLimitError("feasible set larger than limit");
      sink(Solution(elems));
      return;
    }
    visited[v] = 1;
    for (int ai : adj[v]) {
      const Arc &a = g.arcs[ai];
      if (visited[a.to]) continue;
      elems.push_back(a.element);
      rec(a.to);
      elems.pop_back();
    }
    visited[v] = 0;
  };
  rec(g.s);
}

inline void enumerate_trees(const GraphStructure &g, long long limit, long long &count,
                            const SolutionSink &sink) {
  const int E = static_cast<int>(g.edges.size());
  const int V = g.num_vertices;
  std::vector<int> chosen;
  // include/exclude over edges with a connectivity prune
  std::function<void(int, const DisjointSet &)> rec = [&](int idx, const DisjointSet &dsu) {
    if (static_cast<int>(chosen.size()) == V - 1) {
      if (++count > limit) throw EnumerationLimitError("feasible set larger than limit");
      std::vector<int> elems;
      for (int ei : chosen) elems.push_back(g.edges[ei].element);
      sink(Solution(std::move(elems)));
      return;
    }
    if (idx == E) return;
    {
      DisjointSet probe = dsu;
      int comps = V - static_cast<int>(chosen.size());
      for (int j = idx; j < E; ++j)
        if (probe.unite(g.edges[j].u, g.edges[j].v)) --comps;
      if (comps > 1) return;  // cannot be completed to a spanning tree
    }
    DisjointSet with = dsu;
    if (with.unite(g.edges[idx].u, g.edges[idx].v)) {
      chosen.push_back(idx);
      rec(idx + 1, with);
      chosen.pop_back();
    }
    rec(idx + 1, dsu);
  };
  rec(0, DisjointSet(V));
}

inline void enumerate_matchings(const BipartiteStructure &g, long long limit, long long &count,
                                const SolutionSink &sink) {
  const int m = g.size;
  std::vector<std::vector<int>> adj(m);  // edge indices per left vertex
  for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei)
    adj[g.edges[ei].left].push_back(ei);
  std::vector<char> rused(m, 0);
  std::vector<int> elems;
  std::function<void(int)> rec = [&](int l) {
    if (l == m) {
      if (++count > limit) throw EnumerationLimitError("feasible set larger than limit");
      sink(Solution(elems));
      return;
    }
    for (int ei : adj[l]) {
      const auto &e = g.edges[ei];
      if (rused[e.right]) continue;
      rused[e.right] = 1;
      elems.push_back(e.element);
      rec(l + 1);
      elems.pop_back();
      rused[e.right] = 0;
    }
  };
  rec(0);
}

inline void enumerate_cuts(const DigraphStructure &g, long long limit, long long &count,
                           const SolutionSink &sink) {
  std::vector<int> middle;
  for (int v = 0; v < g.num_vertices; ++v)
    if (v != g.s && v != g.t) middle.push_back(v);
  if (middle.size() > 25)
    throw EnumerationLimitError("st-cut enumeration: too many vertices");
  std::set<std::vector<int>> cuts;  // distinct crossing sets, sorted order
  for (std::uint64_t mask = 0; mask < (1ull << middle.size()); ++mask) {
    std::vector<char> in_s(g.num_vertices, 0);
    in_s[g.s] = 1;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (mask >> i & 1) in_s[middle[i]] = 1;
    std::vector<int> crossing;
    for (const auto &a : g.arcs)
      if (in_s[a.from] && !in_s[a.to]) crossing.push_back(a.element);
    std::sort(crossing.begin(), crossing.end());
    cuts.insert(std::move(crossing));
    if (static_cast<long long>(cuts.size()) > limit)
      throw EnumerationLimitError("feasible set larger than limit");
  }
  for (const auto &c : cuts) {
    ++count;
    Solution x;
    x.elements = c;
    sink(x);
  }
}

} // namespace detail

/// Visits every feasible solution exactly once; throws EnumerationLimitError
/// when the feasible set exceeds `limit`.
inline void for_each_feasible(const ProblemInstance &inst, long long limit,
                              const detail::SolutionSink &sink) {
  long long count = 0;
  switch (inst.kind) {
    case Kind::Selection:
      detail::enumerate_selection(inst.n(), inst.selection().p, limit, count, sink);
      return;
    case Kind::ShortestPath:
      detail::enumerate_paths(inst.digraph(), limit, count, sink);
      return;
    case Kind::SpanningTree:
      detail::enumerate_trees(inst.graph(), limit, count, sink);
      return;
    case Kind::Assignment:
      detail::enumerate_matchings(inst.bipartite(), limit, count, sink);
      return;
    case Kind::STCut:
      detail::enumerate_cuts(inst.digraph(), limit, count, sink);
      return;
  }
}

inline std::vector<Solution> enumerate_feasible(const ProblemInstance &inst, long long limit) {
  std::vector<Solution> out;
  for_each_feasible(inst, limit, [&](const Solution &x) { out.push_back(x); });
  return out;
}

struct Evaluation {
  double owa = 0.0;
  std::vector<Cost> scenario_costs;
};

/// Per-scenario cost of a solution plus its OWA value.
inline Evaluation evaluate(const ProblemInstance &inst, const Solution &X,
                           const WeightVector &w) {
  if (w.size() != inst.K()) throw DimensionError("evaluate: weight length != K");
  if (!is_feasible(inst, X)) throw FeasibilityError("evaluate: solution infeasible");
  Evaluation ev;
  ev.scenario_costs.resize(inst.K(), 0);
  for (int j = 0; j < inst.K(); ++j)
    for (int e : X.elements) ev.scenario_costs[j] += inst.scenarios.costs[j][e];
  ev.owa = owa_value(ev.scenario_costs, w);
  return ev;
}

/// Scenario costs without the feasibility check (internal fast path).
inline std::vector<Cost> scenario_costs_of(const ProblemInstance &inst, const Solution &X) {
  std::vector<Cost> sc(inst.K(), 0);
  for (int j = 0; j < inst.K(); ++j)
    for (int e : X.elements) sc[j] += inst.scenarios.costs[j][e];
  return sc;
}

} // namespace owa

#endif

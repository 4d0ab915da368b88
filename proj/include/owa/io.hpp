/**
 * @file io.hpp
 * @brief On-disk instance format (JSON) with exact round-trip.
 *
 * Document fields: kind, n, K, scale, structure, costs, optional weights,
 * optional metadata {generator, seed}. Costs are stored times 10^-scale;
 * they are rescaled to integers at parse time and must come out integral.
 */

#ifndef OWA_IO_HPP
#define OWA_IO_HPP

#include <fstream>
#include <optional>

#include <json.hpp>

#include "owa/problems.hpp"

namespace owa {

struct InstanceMetadata {
  std::string generator;
  std::uint64_t seed = 0;
  bool operator==(const InstanceMetadata &) const = default;
};

struct InstanceFile {
  ProblemInstance instance;
  std::optional<WeightVector> weights;
  std::optional<InstanceMetadata> metadata;
  bool operator==(const InstanceFile &) const = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Kind kind_from_name(const std::string &s) {
  if (s == "shortest-path") return Kind::ShortestPath;
  if (s == "spanning-tree") return Kind::SpanningTree;
  if (s == "selection") return Kind::Selection;
  if (s == "assignment") return Kind::Assignment;
  if (s == "st-cut") return Kind::STCut;
  throw ParseError("unknown kind '" + s + "'");
}

inline Json structure_to_json(const ProblemInstance &inst) {
  Json j;
  switch (inst.kind) {
    case Kind::Selection:
      j["p"] = inst.selection().p;
      break;
    case Kind::ShortestPath:
    case Kind::STCut: {
      const auto &g = inst.digraph();
      j["vertices"] = g.num_vertices;
      j["s"] = g.s;
      j["t"] = g.t;
      Json arcs = Json::array();
      for (const auto &a : g.arcs)
        arcs.push_back({{"from", a.from}, {"to", a.to}, {"element", a.element}});
      j["arcs"] = std::move(arcs);
      break;
    }
    case Kind::SpanningTree: {
      const auto &g = inst.graph();
      j["vertices"] = g.num_vertices;
      Json edges = Json::array();
      for (const auto &e : g.edges)
        edges.push_back({{"from", e.u}, {"to", e.v}, {"element", e.element}});
      j["edges"] = std::move(edges);
      break;
    }
    case Kind::Assignment: {
      const auto &g = inst.bipartite();
      j["size"] = g.size;
      Json edges = Json::array();
      for (const auto &e : g.edges)
        edges.push_back({{"left", e.left}, {"right", e.right}, {"element", e.element}});
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

inline Structure structure_from_json(Kind kind, const Json &j) {
  switch (kind) {
    case Kind::Selection:
      return SelectionStructure{j.at("p").get<int>()};
    case Kind::ShortestPath:
    case Kind::STCut: {
      DigraphStructure g;
      g.num_vertices = j.at("vertices").get<int>();
      g.s = j.at("s").get<int>();
      g.t = j.at("t").get<int>();
      for (const auto &a : j.at("arcs"))
        g.arcs.push_back({a.at("from").get<int>(), a.at("to").get<int>(),
                          a.at("element").get<int>()});
      return g;
    }
    case Kind::SpanningTree: {
      GraphStructure g;
      g.num_vertices = j.at("vertices").get<int>();
      for (const auto &e : j.at("edges"))
        g.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                           e.at("element").get<int>()});
      return g;
    }
    case Kind::Assignment: {
      BipartiteStructure g;
      g.size = j.at("size").get<int>();
      for (const auto &e : j.at("edges"))
        g.edges.push_back({e.at("left").get<int>(), e.at("right").get<int>(),
                           e.at("element").get<int>()});
      return g;
    }
  }
  throw ParseError("bad structure");
}

} // namespace detail

inline detail::Json instance_to_json(const InstanceFile &file) {
  detail::Json j;
  const auto &inst = file.instance;
  j["kind"] = kind_name(inst.kind);
  j["n"] = inst.n();
  j["K"] = inst.K();
  j["scale"] = 0;
  j["structure"] = detail::structure_to_json(inst);
  j["costs"] = inst.scenarios.costs;
  if (file.weights) j["weights"] = file.weights->values();
  if (file.metadata)
    j["metadata"] = {{"generator", file.metadata->generator}, {"seed", file.metadata->seed}};
  return j;
}

inline InstanceFile instance_from_json(const detail::Json &j) {
  InstanceFile file;
  try {
    ProblemInstance inst;
    inst.kind = detail::kind_from_name(j.at("kind").get<std::string>());
    const int n = j.at("n").get<int>();
    const int K = j.at("K").get<int>();
    const int scale = j.value("scale", 0);
    const double factor = std::pow(10.0, scale);
    inst.structure = detail::structure_from_json(inst.kind, j.at("structure"));
    std::vector<std::vector<Cost>> costs;
    int row_no = 0;
    for (const auto &row : j.at("costs")) {
      ++row_no;
      std::vector<Cost> r;
      for (const auto &x : row) {
        double scaled = x.get<double>() * factor;
        Cost c = static_cast<Cost>(std::llround(scaled));
        if (std::abs(scaled - static_cast<double>(c)) > 1e-6)
          throw ParseError("costs row " + std::to_string(row_no) +
                           ": value not integral at scale " + std::to_string(scale));
        r.push_back(c);
      }
      costs.push_back(std::move(r));
    }
    inst.scenarios = ScenarioSet(n, K, std::move(costs));
    inst.validate();
    file.instance = std::move(inst);
    if (j.contains("weights"))
      file.weights = WeightVector(j.at("weights").get<std::vector<double>>());
    if (j.contains("metadata")) {
      InstanceMetadata md;
      md.generator = j.at("metadata").value("generator", std::string{});
      md.seed = j.at("metadata").value("seed", std::uint64_t{0});
      file.metadata = md;
    }
  } catch (const detail::Json::exception &e) {
    throw ParseError(std::string("instance document: ") + e.what());
  }
  return file;
}

inline void write_instance(const std::string &path, const InstanceFile &file) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << instance_to_json(file).dump(2) << "\n";
}

inline InstanceFile read_instance(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  detail::Json j;
  try {
    j = detail::Json::parse(in);
  } catch (const detail::Json::parse_error &e) {
    throw ParseError(std::string(path) + ": " + e.what());
  }
  return instance_from_json(j);
}

} // namespace owa

#endif

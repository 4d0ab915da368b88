/**
 * @file owa_cli.cpp
 * @brief Command-line front end: solve, generate, evaluate and benchmark
 *        OWA instances with ratio-certificate checking.
 *
 * Exit codes: 0 success, 1 internal/partial failure, 2 infeasible,
 * 3 parameter or parse error.
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "owa/algorithms.hpp"
#include "owa/instances.hpp"
#include "owa/io.hpp"
#include "owa/pareto.hpp"

using namespace owa;

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

/// Weight spec grammar: preset:<name>[:param] | file:<path> | inline
/// comma-separated list.
WeightVector parse_weight_spec(const std::string &spec, int K) {
  if (spec.rfind("preset:", 0) == 0) {
    std::string rest = spec.substr(7);
    std::string name = rest, param;
    if (auto pos = rest.find(':'); pos != std::string::npos) {
      name = rest.substr(0, pos);
      param = rest.substr(pos + 1);
    }
    if (name == "maximum") return preset_weights(WeightClass::maximum(), K);
    if (name == "minimum") return preset_weights(WeightClass::minimum(), K);
    if (name == "average") return preset_weights(WeightClass::average(), K);
    if (name == "median") return preset_weights(WeightClass::median(), K);
    if (name == "quantile") {
      if (param.empty()) throw ParameterError("weights: preset:quantile:<k> needs k");
      return preset_weights(WeightClass::quantile(std::stoi(param)), K);
    }
    if (name == "hurwicz") {
      if (param.empty()) throw ParameterError("weights: preset:hurwicz:<alpha> needs alpha");
      return preset_weights(WeightClass::hurwicz(std::stod(param)), K);
    }
    throw ParameterError("weights: unknown preset '" + name + "'");
  }
  std::vector<double> w;
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw ParseError("weights: cannot open '" + spec.substr(5) + "'");
    std::string tok;
    while (in >> tok) {
      for (char &c : tok)
        if (c == ',') c = ' ';
      std::istringstream ts(tok);
      double x;
      while (ts >> x) w.push_back(x);
    }
  } else {
    std::string s = spec;
    for (char &c : s)
      if (c == ',') c = ' ';
    std::istringstream in(s);
    double x;
    while (in >> x) w.push_back(x);
    if (!in.eof()) throw ParameterError("weights: expected a comma-separated number list");
  }
  if (static_cast<int>(w.size()) != K)
    throw DimensionError("weights: got " + std::to_string(w.size()) + " entries, instance has K=" +
                         std::to_string(K));
  return WeightVector(std::move(w));
}

struct AlgoParams {
  double alpha = 0.5;
  double epsilon = 0.1;
  int k = 1;
  long long oracle_limit = 5000;
  std::string inner = "aggregate";  // hurwicz-minmax / quantile-enum inner solver
};

MinMaxSolver make_inner(const AlgoParams &p) {
  if (p.inner == "exact") return exact_minmax_solver(p.oracle_limit);
  if (p.inner == "aggregate") return aggregate_minmax_solver();
  throw ParameterError("inner solver must be 'exact' or 'aggregate'");
}

AlgorithmReport run_algorithm(const std::string &name, const ProblemInstance &inst,
                              const WeightVector &w, const AlgoParams &p) {
  if (name == "bruteforce") return brute_force_owa(inst, w, p.oracle_limit);
  if (name == "min-average") return solve_min_average(inst);
  if (name == "min-min") return solve_min_min(inst);
  if (name == "minmax-aggregate") return solve_minmax_aggregate(inst);
  if (name == "aggregate") return solve_owa_aggregate(inst, w);
  if (name == "two-scenario") return solve_two_scenario_owa(inst, p.alpha);
  if (name == "hurwicz-top2") return solve_hurwicz_top2(inst, p.alpha);
  if (name == "hurwicz-minmax") return solve_hurwicz_via_minmax(inst, p.alpha, make_inner(p));
  if (name == "quantile-enum")
    return solve_quantile_enum(inst, p.k, exact_minmax_solver(p.oracle_limit));
  if (name == "fptas") return fptas_min_owa(inst, w, p.epsilon);
  throw ParameterError("unknown algorithm '" + name + "'");
}

void print_report(const ProblemInstance &inst, const WeightVector &w,
                  const AlgorithmReport &r) {
  // never trust algorithm-private arithmetic: re-evaluate before printing
  Evaluation ev = evaluate(inst, r.solution, w);
  std::cout << "solution:";
  for (int e : r.solution.elements) std::cout << ' ' << e;
  std::cout << "\nscenario-costs:";
  for (Cost c : ev.scenario_costs) std::cout << ' ' << c;
  std::cout << "\nowa: " << fmt(ev.owa) << "\n";
  if (r.certificate)
    std::cout << "certificate: ratio " << fmt(r.certificate->claimed_ratio) << " ("
              << r.certificate->basis << ")\n";
  else
    std::cout << "certificate: none\n";
  std::cout << "elapsed-ms: " << fmt(r.elapsed_ms) << "\n";
}

// ---------------------------------------------------------------- solve

struct SolveOpts {
  std::string instance, weights, algo = "bruteforce";
  AlgoParams params;
};

int cmd_solve(const SolveOpts &o) {
  InstanceFile file = read_instance(o.instance);
  const ProblemInstance &inst = file.instance;
  WeightVector w;
  if (!o.weights.empty())
    w = parse_weight_spec(o.weights, inst.K());
  else if (file.weights)
    w = *file.weights;
  else
    throw ParameterError("no weights: pass --weights or store them in the instance file");

  AlgorithmReport r = run_algorithm(o.algo, inst, w, o.params);
  if (!r.certificate)
    std::cerr << "warning: no ratio certificate for this weight class / parameters\n";
  std::cout << "instance: " << o.instance << " (" << kind_name(inst.kind) << ", n=" << inst.n()
            << ", K=" << inst.K() << ")\n"
            << "weights: " << classify_weights(w).str() << "\n"
            << "algorithm: " << o.algo << "\n";
  print_report(inst, w, r);
  return 0;
}

// ------------------------------------------------------------------ gen

struct GenOpts {
  std::string gadget, out, kind = "selection", a_list, formula, variant = "nondecreasing",
              base;
  int K = 2, L = 0, rho = 1;
  RandomShape shape;
  Cost cost_max = 20;
  std::uint64_t seed = 1;
};

Kind parse_kind(const std::string &s) { return detail::kind_from_name(s); }

int cmd_gen(const GenOpts &o) {
  InstanceFile file;
  if (o.gadget == "tight-selection") {
    file.instance = gen_tight_selection(o.K);
    file.metadata = InstanceMetadata{"tight-selection", 0};
  } else if (o.gadget == "partition") {
    std::vector<Cost> a;
    std::string s = o.a_list;
    for (char &c : s)
      if (c == ',') c = ' ';
    std::istringstream in(s);
    Cost x;
    while (in >> x) a.push_back(x);
    if (a.empty()) throw ParameterError("gen partition: --a is required");
    file.instance = gen_partition_gadget(a, parse_kind(o.kind));
    file.weights = preset_weights(WeightClass::hurwicz(0.6), 2);
    file.metadata = InstanceMetadata{"partition", 0};
  } else if (o.gadget == "min3sat") {
    if (o.formula.empty()) throw ParameterError("gen min3sat: --formula is required");
    std::ifstream in(o.formula);
    if (!in) throw ParseError("cannot open formula '" + o.formula + "'");
    std::stringstream text;
    text << in.rdbuf();
    Min3SatVariant variant;
    if (o.variant == "nondecreasing") variant = Min3SatVariant::Nondecreasing;
    else if (o.variant == "median") variant = Min3SatVariant::Median;
    else if (o.variant == "positive") variant = Min3SatVariant::Positive;
    else throw ParameterError("gen min3sat: variant must be nondecreasing|median|positive");
    auto [inst, w] = gen_min3sat_gadget(parse_formula(text.str()), o.L, variant, o.rho);
    file.instance = std::move(inst);
    file.weights = std::move(w);
    file.metadata = InstanceMetadata{"min3sat-" + o.variant, 0};
  } else if (o.gadget == "hurwicz-lift") {
    if (o.base.empty()) throw ParameterError("gen hurwicz-lift: --base is required");
    file = read_instance(o.base);
    file.instance = gen_hurwicz_lift(file.instance);
    file.weights.reset();  // the base weights no longer match K
    file.metadata = InstanceMetadata{"hurwicz-lift", file.metadata ? file.metadata->seed : 0};
  } else if (o.gadget == "random") {
    file.instance = gen_random(parse_kind(o.kind), o.shape, o.K, o.cost_max, o.seed);
    file.metadata = InstanceMetadata{"random", o.seed};
  } else {
    throw ParameterError("unknown gadget '" + o.gadget + "'");
  }
  write_instance(o.out, file);
  std::cout << "wrote " << o.out << ": kind=" << kind_name(file.instance.kind)
            << " n=" << file.instance.n() << " K=" << file.instance.K() << "\n";
  return 0;
}

// ----------------------------------------------------------------- eval

struct EvalOpts {
  std::string instance, weights, solution;
};

int cmd_eval(const EvalOpts &o) {
  InstanceFile file = read_instance(o.instance);
  WeightVector w;
  if (!o.weights.empty())
    w = parse_weight_spec(o.weights, file.instance.K());
  else if (file.weights)
    w = *file.weights;
  else
    throw ParameterError("no weights: pass --weights or store them in the instance file");
  std::vector<int> elems;
  std::string s = o.solution;
  for (char &c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  int e;
  while (in >> e) elems.push_back(e);
  Evaluation ev = evaluate(file.instance, Solution(std::move(elems)), w);
  std::cout << "scenario-costs:";
  for (Cost c : ev.scenario_costs) std::cout << ' ' << c;
  std::cout << "\nowa: " << fmt(ev.owa) << "\n";
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchRow {
  std::string id, kind, weight_class, algorithm;
  int n = 0, K = 0;
  std::string owa, oracle, observed, certified, elapsed_ms, seed;
  bool errored = false;
};

const char *kBenchColumns[] = {"instance",       "kind",  "n",          "K",
                               "weight_class",   "algorithm", "owa",    "oracle",
                               "observed_ratio", "certified_ratio", "elapsed_ms", "seed"};

std::vector<std::string> row_fields(const BenchRow &r) {
  return {r.id,  r.kind,   std::to_string(r.n), std::to_string(r.K), r.weight_class,
          r.algorithm, r.owa, r.oracle, r.observed, r.certified, r.elapsed_ms, r.seed};
}

void write_table(const std::string &path, const std::vector<BenchRow> &rows,
                 const std::string &format) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  const int C = 12;
  if (format == "csv") {
    for (int c = 0; c < C; ++c) out << kBenchColumns[c] << (c + 1 < C ? "," : "\n");
    for (const auto &r : rows) {
      auto f = row_fields(r);
      for (int c = 0; c < C; ++c) out << f[c] << (c + 1 < C ? "," : "\n");
    }
  } else if (format == "markdown") {
    out << "|";
    for (int c = 0; c < C; ++c) out << ' ' << kBenchColumns[c] << " |";
    out << "\n|";
    for (int c = 0; c < C; ++c) out << " --- |";
    out << "\n";
    for (const auto &r : rows) {
      auto f = row_fields(r);
      out << "|";
      for (int c = 0; c < C; ++c) out << ' ' << f[c] << " |";
      out << "\n";
    }
  } else {
    throw ParameterError("format must be csv or markdown");
  }
}

struct BenchOpts {
  std::string suite, out, format = "csv";
  long long oracle_limit = 5000;
};

int cmd_bench(const BenchOpts &o) {
  std::ifstream in(o.suite);
  if (!in) throw ParseError("cannot open suite '" + o.suite + "'");
  detail::Json suite;
  try {
    suite = detail::Json::parse(in);
  } catch (const detail::Json::parse_error &e) {
    throw ParseError(std::string("suite: ") + e.what());
  }
  long long oracle_limit = suite.value("oracle_limit", o.oracle_limit);

  std::vector<BenchRow> rows;
  std::map<std::string, double> max_ratio;  // per algorithm
  bool any_error = false;

  for (const auto &job : suite.at("jobs")) {
    const std::string id = job.at("id").get<std::string>();
    const std::string generator = job.value("generator", std::string("random"));
    AlgoParams params;
    params.alpha = job.value("alpha", 0.5);
    params.epsilon = job.value("epsilon", 0.1);
    params.k = job.value("k", 1);
    params.inner = job.value("inner", std::string("aggregate"));
    params.oracle_limit = oracle_limit;

    for (const auto &seed_j : job.at("seeds")) {
      const std::uint64_t seed = seed_j.get<std::uint64_t>();
      ProblemInstance inst;
      std::optional<WeightVector> gadget_w;
      if (generator == "tight-selection") {
        inst = gen_tight_selection(static_cast<int>(seed));  // seed doubles as K
      } else if (generator == "partition") {
        inst = gen_partition_gadget(job.at("a").get<std::vector<Cost>>(),
                                    detail::kind_from_name(job.value("kind",
                                                                     std::string("shortest-path"))));
      } else if (generator == "min3sat") {
        Min3SatVariant variant = Min3SatVariant::Nondecreasing;
        std::string v = job.value("variant", std::string("nondecreasing"));
        if (v == "median") variant = Min3SatVariant::Median;
        if (v == "positive") variant = Min3SatVariant::Positive;
        auto [gi, gw] = gen_min3sat_gadget(job.at("clauses").get<std::vector<std::vector<int>>>(),
                                           job.value("L", 0), variant, job.value("rho", 1));
        inst = std::move(gi);
        gadget_w = std::move(gw);
      } else if (generator == "random") {
        RandomShape shape;
        shape.n = job.value("n", shape.n);
        shape.p = job.value("p", shape.p);
        shape.layers = job.value("layers", shape.layers);
        shape.width = job.value("width", shape.width);
        shape.vertices = job.value("vertices", shape.vertices);
        shape.size = job.value("size", shape.size);
        shape.middle = job.value("middle", shape.middle);
        inst = gen_random(detail::kind_from_name(job.value("kind", std::string("selection"))),
                          shape, job.value("K", 2), job.value("cost_max", Cost{20}), seed);
      } else {
        throw ParameterError("suite: unknown generator '" + generator + "'");
      }

      WeightVector w = gadget_w ? *gadget_w
                                : parse_weight_spec(job.at("weights").get<std::string>(),
                                                    inst.K());
      std::optional<double> oracle;
      try {
        oracle = brute_force_owa(inst, w, oracle_limit).owa;
      } catch (const EnumerationLimitError &) {
        // feasible set too large: rows stay oracle-free
      }

      for (const auto &algo_j : job.at("algorithms")) {
        const std::string algo = algo_j.get<std::string>();
        BenchRow row;
        row.id = id + "-" + std::to_string(seed);
        row.kind = kind_name(inst.kind);
        row.n = inst.n();
        row.K = inst.K();
        row.weight_class = classify_weights(w).str();
        row.algorithm = algo;
        row.seed = std::to_string(seed);
        try {
          AlgorithmReport r = run_algorithm(algo, inst, w, params);
          Evaluation ev = evaluate(inst, r.solution, w);  // re-validate printed OWA
          row.owa = fmt(ev.owa);
          row.elapsed_ms = fmt(r.elapsed_ms);
          if (oracle) {
            row.oracle = fmt(*oracle);
            if (*oracle > kTol) {
              double ratio = ev.owa / *oracle;
              row.observed = fmt(ratio);
              auto [it, ins] = max_ratio.try_emplace(algo, ratio);
              if (!ins) it->second = std::max(it->second, ratio);
            }
          }
          if (r.certificate) row.certified = fmt(r.certificate->claimed_ratio);
        } catch (const Error &e) {
          row.owa = "ERROR";
          row.errored = true;
          any_error = true;
          std::cerr << "bench row " << row.id << " (" << algo << "): " << e.what() << "\n";
        }
        rows.push_back(std::move(row));
      }
    }
  }

  write_table(o.out, rows, o.format);
  for (const auto &[algo, ratio] : max_ratio)
    std::cout << "max observed ratio " << algo << ": " << fmt(ratio) << "\n";
  std::cout << "wrote " << o.out << " (" << rows.size() << " rows)\n";
  return any_error ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Solvers, generators and benchmarks for combinatorial optimization "
               "under scenario uncertainty with the OWA criterion"};
  app.require_subcommand(1);

  SolveOpts so;
  auto *solve = app.add_subcommand("solve", "Run one algorithm on an instance file");
  solve->add_option("--instance", so.instance, "Instance file (JSON)")->required();
  solve->add_option("--weights", so.weights, "Weight spec: preset:<name>[:param] | "
                                             "file:<path> | inline comma list");
  solve->add_option("--algo", so.algo,
                    "bruteforce|min-average|min-min|minmax-aggregate|aggregate|two-scenario|"
                    "hurwicz-top2|hurwicz-minmax|quantile-enum|fptas");
  solve->add_option("--alpha", so.params.alpha, "Hurwicz alpha");
  solve->add_option("--epsilon", so.params.epsilon, "FPTAS epsilon");
  solve->add_option("--k", so.params.k, "Quantile index k");
  solve->add_option("--inner", so.params.inner, "Inner min-max solver: exact|aggregate");
  solve->add_option("--oracle-limit", so.params.oracle_limit,
                    "Enumeration cap for brute force / exact inner solvers");

  GenOpts go;
  auto *gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--gadget", go.gadget,
                  "tight-selection|partition|min3sat|hurwicz-lift|random")->required();
  gen->add_option("--out", go.out, "Output path")->required();
  gen->add_option("--K", go.K, "Scenario count (tight-selection, random)");
  gen->add_option("--kind", go.kind, "Problem kind (partition, random)");
  gen->add_option("--a", go.a_list, "Partition numbers, comma separated");
  gen->add_option("--formula", go.formula, "Clause file: one clause per line, signed ints");
  gen->add_option("--L", go.L, "Min-3-SAT threshold L");
  gen->add_option("--variant", go.variant, "min3sat variant: nondecreasing|median|positive");
  gen->add_option("--rho", go.rho, "Positive-variant gap factor");
  gen->add_option("--base", go.base, "Base instance file (hurwicz-lift)");
  gen->add_option("--n", go.shape.n, "Selection ground-set size");
  gen->add_option("--p", go.shape.p, "Selection cardinality");
  gen->add_option("--layers", go.shape.layers, "Shortest-path DAG layers");
  gen->add_option("--width", go.shape.width, "Shortest-path DAG layer width");
  gen->add_option("--vertices", go.shape.vertices, "Spanning-tree vertex count");
  gen->add_option("--size", go.shape.size, "Assignment side size");
  gen->add_option("--middle", go.shape.middle, "s-t cut middle vertex count");
  gen->add_option("--cost-max", go.cost_max, "Random cost upper bound");
  gen->add_option("--seed", go.seed, "Random seed");

  EvalOpts eo;
  auto *ev = app.add_subcommand("eval", "Evaluate a given solution on an instance");
  ev->add_option("--instance", eo.instance, "Instance file (JSON)")->required();
  ev->add_option("--weights", eo.weights, "Weight spec");
  ev->add_option("--solution", eo.solution, "Element indices, comma separated")->required();

  BenchOpts bo;
  auto *bench = app.add_subcommand("bench", "Run a benchmark suite and write a table");
  bench->add_option("--suite", bo.suite, "Suite spec (JSON)")->required();
  bench->add_option("--out", bo.out, "Output table path")->required();
  bench->add_option("--format", bo.format, "csv|markdown");
  bench->add_option("--oracle-limit", bo.oracle_limit,
                    "Auto-enable the brute-force oracle up to this feasible-set size");

  try {
    app.parse(argc, argv);
    if (solve->parsed()) return cmd_solve(so);
    if (gen->parsed()) return cmd_gen(go);
    if (ev->parsed()) return cmd_eval(eo);
    if (bench->parsed()) return cmd_bench(bo);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 3;
  } catch (const InfeasibleError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FeasibilityError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DimensionError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "owa/instances.hpp"
#include "owa/io.hpp"

using namespace owa;

namespace {

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

struct FileGuard {
  std::string path;
  ~FileGuard() { std::remove(path.c_str()); }
};

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  out << text;
}

} // namespace

TEST_CASE("instance files round-trip exactly") {
  std::vector<InstanceFile> files;
  files.push_back({gen_tight_selection(4), WeightVector({0.5, 0.25, 0.125, 0.125}),
                   InstanceMetadata{"tight-selection", 0}});
  files.push_back({gen_partition_gadget({2, 3, 3, 4}, Kind::SpanningTree), std::nullopt,
                   std::nullopt});
  for (Kind kind : {Kind::ShortestPath, Kind::Assignment, Kind::STCut})
    files.push_back({gen_random(kind, {}, 3, 40, 11), std::nullopt,
                     InstanceMetadata{"random", 11}});

  int idx = 0;
  for (const auto &file : files) {
    FileGuard g{temp_path("owa_io_rt_" + std::to_string(idx++) + ".json")};
    write_instance(g.path, file);
    auto back = read_instance(g.path);
    CHECK(back == file);
  }
}

TEST_CASE("scale rescales fractional costs to integers") {
  detail::Json j;
  j["kind"] = "selection";
  j["n"] = 2;
  j["K"] = 1;
  j["scale"] = 2;
  j["structure"] = {{"p", 1}};
  j["costs"] = {{0.25, 1.5}};
  auto file = instance_from_json(j);
  CHECK(file.instance.scenarios.costs == std::vector<std::vector<Cost>>{{25, 150}});

  j["scale"] = 1;  // 0.25 * 10 is not integral
  CHECK_THROWS_AS(instance_from_json(j), ParseError);
}

TEST_CASE("parse errors carry a usable message") {
  FileGuard g{temp_path("owa_io_bad.json")};

  write_text(g.path, "{ not json");
  CHECK_THROWS_AS(read_instance(g.path), ParseError);

  write_text(g.path, R"({"kind":"selection","n":2,"K":1})");  // missing structure/costs
  CHECK_THROWS_AS(read_instance(g.path), ParseError);

  write_text(g.path,
             R"({"kind":"teleport","n":2,"K":1,"structure":{"p":1},"costs":[[0,0]]})");
  CHECK_THROWS_WITH_AS(read_instance(g.path), doctest::Contains("teleport"), ParseError);

  CHECK_THROWS_AS(read_instance(temp_path("owa_io_missing.json")), ParseError);
}

TEST_CASE("documents failing instance validation are rejected") {
  detail::Json j = instance_to_json({gen_tight_selection(2), std::nullopt, std::nullopt});
  j["structure"]["p"] = 9;  // p > n
  CHECK_THROWS_AS(instance_from_json(j), Error);
}

TEST_CASE("weights in the document must be a valid distribution") {
  detail::Json j = instance_to_json({gen_tight_selection(2), std::nullopt, std::nullopt});
  j["weights"] = {0.9, 0.9};
  CHECK_THROWS_AS(instance_from_json(j), ParameterError);
  j["weights"] = {0.5, 0.5};
  auto file = instance_from_json(j);
  REQUIRE(file.weights.has_value());
  CHECK(file.weights->values() == std::vector<double>{0.5, 0.5});
}

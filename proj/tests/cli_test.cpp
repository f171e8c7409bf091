#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "lcord/graph_io.hpp"

namespace lcord::cli {
namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("lcord_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

json slurp(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

TEST(Gen, Families) {
  const Outcome path = invoke({"gen", "path:4"});
  EXPECT_EQ(path.code, kOk);
  EXPECT_EQ(path.out, "{\"order\":4,\"edges\":[[0,1],[1,2],[2,3]]}\n");
  EXPECT_EQ(json::parse(invoke({"gen", "complete:4"}).out)["edges"].size(), 6u);
  EXPECT_EQ(json::parse(invoke({"gen", "bipartite:2:3"}).out)["edges"].size(), 6u);
  EXPECT_EQ(json::parse(invoke({"gen", "edges:3:0-1,1-2"}).out)["edges"].size(), 2u);
}

TEST(Gen, BadSpecsAreUsageErrors) {
  const Outcome cycle = invoke({"gen", "cycle:2"});
  EXPECT_EQ(cycle.code, kUsage);
  EXPECT_TRUE(cycle.out.empty());
  EXPECT_EQ(json::parse(cycle.err)["error"], "usage");
  EXPECT_EQ(invoke({"gen", "wheel:5"}).code, kIoError);
  EXPECT_EQ(invoke({"gen", "path:x"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
}

TEST(Gen, RoundTripThroughFiles) {
  TempDir dir;
  const std::string file = dir.file("g.json");
  ASSERT_EQ(invoke({"gen", "cycle:7", "--out", file}).code, kOk);
  const Graph g = resolve_graph(file);
  EXPECT_EQ(g, make_cycle(7));
  const std::string copy = dir.file("g2.json");
  ASSERT_EQ(invoke({"op", "join", file, "path:1", "--out", copy}).code, kOk);
  EXPECT_EQ(resolve_graph(copy).size(), 14);
}

TEST(Op, Products) {
  const json cart = json::parse(invoke({"op", "cart", "path:2", "path:2"}).out);
  const Graph square = graph_from_json(cart);
  EXPECT_EQ(square.size(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(square.degree(v), 2);
  EXPECT_TRUE(is_connected(square));
  EXPECT_EQ(cart["operation"], "cartesian");
  const json ten = json::parse(invoke({"op", "tensor", "path:2", "path:2"}).out);
  EXPECT_EQ(ten["connected"], false);
  EXPECT_FALSE(ten["warnings"].empty());
  const json strong = json::parse(invoke({"op", "strong", "complete:2", "complete:2"}).out);
  EXPECT_EQ(graph_from_json(strong), make_complete(4));
  EXPECT_EQ(invoke({"op", "cart", "missing.json", "path:2"}).code, kIoError);
  EXPECT_EQ(invoke({"op", "sum", "path:2", "path:2"}).code, kUsage);
}

TEST(Op, DotFormat) {
  const Outcome dot = invoke({"op", "join", "path:1", "path:2", "--format", "dot"});
  EXPECT_EQ(dot.code, kOk);
  EXPECT_EQ(dot.out.rfind("graph G {", 0), 0u);
}

TEST(Construct, CoronaPath) {
  const Outcome r = invoke({"construct", "corona-path", "--g", "cycle:3", "--p", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["theorem"], "corona-path");
  EXPECT_EQ(doc["verified"]["e0"], 6);
  EXPECT_EQ(doc["verified"]["e1"], 6);
  EXPECT_EQ(doc["verified"]["cordial"], true);
  EXPECT_EQ(doc["predicted"]["e0"], 6);
}

TEST(Construct, ViolationCarriesSides) {
  const Outcome r = invoke({"construct", "join", "--g1", "cycle:3", "--g2", "path:1",
                            "--lab-g1", "1,2,3", "--lab-g2", "1", "--p", "3"});
  EXPECT_EQ(r.code, kHypothesis);
  const json err = json::parse(r.err);
  EXPECT_EQ(err["error"], "hypothesis-violation");
  EXPECT_EQ(err["lhs"], 1);
  EXPECT_EQ(err["rhs"], 3);
  EXPECT_EQ(invoke({"construct", "corona-path", "--g", "cycle:3", "--p", "7"}).code,
            kHypothesis);
  const Outcome tensor = invoke({"construct", "tensor", "--g1", "path:3", "--g2", "cycle:4",
                                 "--lab-g1", "2,1,3", "--p", "3"});
  EXPECT_EQ(tensor.code, kHypothesis);
  EXPECT_EQ(json::parse(tensor.err)["error"], "connectivity-violation");
}

TEST(Construct, SearchesMissingBaseLabelings) {
  const Outcome r = invoke({"construct", "cartesian", "--g1", "cycle:5", "--g2", "cycle:4",
                            "--p", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["verified"]["e0"], 20);
  EXPECT_EQ(doc["verified"]["e1"], 20);
  const Outcome none = invoke({"construct", "tensor", "--g1", "cycle:3", "--g2", "cycle:3",
                               "--p", "3"});
  EXPECT_EQ(none.code, kSearchNone);
}

TEST(Construct, RecipeFile) {
  TempDir dir;
  const std::string recipe = dir.file("recipe.json");
  {
    std::ofstream f(recipe);
    f << R"({"theorem":"tensor","p":3,"g1":"path:3","g2":"cycle:3","lab_g1":[2,1,3]})";
  }
  const std::string bundle = dir.file("bundle.json");
  ASSERT_EQ(invoke({"construct", "--recipe", recipe, "--out", bundle}).code, kOk);
  const json doc = slurp(bundle);
  EXPECT_EQ(doc["graph"]["edges"].size(), 12u);
  EXPECT_EQ(doc["verified"]["e0"], 6);
  // The emitted graph and labeling verify independently.
  const std::string g = dir.file("g.json");
  const std::string lab = dir.file("lab.json");
  { std::ofstream(g) << doc["graph"].dump(); }
  { std::ofstream(lab) << doc["labeling"].dump(); }
  const Outcome v = invoke({"verify", g, lab, "--p", "3"});
  EXPECT_EQ(v.code, kOk) << v.err;
  EXPECT_EQ(v.out, "{\"e0\":6,\"e1\":6,\"cordial\":true}\n");
}

TEST(Verify, TriangleIdentity) {
  const Outcome r = invoke({"verify", "cycle:3", "1,2,3", "--p", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "{\"e0\":2,\"e1\":1,\"cordial\":true}\n");
  EXPECT_EQ(invoke({"verify", "cycle:3", "1,2,2", "--p", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "cycle:3", "1,2,3", "--p", "9"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "edges:4:0-1,2-3", "1,2,3,4", "--p", "3"}).code, kHypothesis);
}

TEST(Search, Outcomes) {
  const Outcome k4 = invoke({"search", "complete:4", "--p", "3"});
  EXPECT_EQ(k4.code, kSearchNone);
  EXPECT_EQ(json::parse(k4.out)["outcome"], "none");
  const Outcome c3 = invoke({"search", "cycle:3", "--p", "3", "--mode", "count"});
  EXPECT_EQ(c3.code, kOk);
  EXPECT_EQ(json::parse(c3.out)["count"], 6);
  const Outcome c5 = invoke({"search", "cycle:5", "--p", "5", "--objective", "diff:1", "--jobs", "2"});
  EXPECT_EQ(c5.code, kOk);
  EXPECT_EQ(json::parse(c5.out)["labeling"].size(), 5u);
  const Outcome tiny = invoke({"search", "complete:9", "--p", "3", "--mode", "none",
                               "--budget-nodes", "10"});
  EXPECT_EQ(tiny.code, kBudgetExhausted);
  EXPECT_EQ(json::parse(tiny.out)["outcome"], "exhausted");
  EXPECT_EQ(invoke({"search", "path:13", "--p", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"search", "path:3", "--p", "3", "--objective", "bogus"}).code, kUsage);
}

TEST(Legendre, Symbols) {
  EXPECT_EQ(invoke({"legendre", "2", "3"}).out, "{\"a\":2,\"p\":3,\"symbol\":-1}\n");
  EXPECT_EQ(invoke({"legendre", "14", "7", "--format", "table"}).out, "0\n");
  EXPECT_EQ(invoke({"legendre", "2", "4"}).code, kUsage);
}

}  // namespace
}  // namespace lcord::cli

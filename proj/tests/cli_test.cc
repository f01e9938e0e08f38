#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shapegeo::cli {
namespace {

using nlohmann::json;

std::string Fixture(const std::string& name) {
  return std::string(SHAPEGEO_FIXTURE_DIR) + "/" + name;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json InvokeJson(std::vector<std::string> args) {
  Result r = Invoke(std::move(args));
  EXPECT_EQ(r.code, kOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, DeterminateTriangle) {
  json doc = InvokeJson({"determinate", Fixture("triangle.shape")});
  EXPECT_EQ(doc["determinacy"]["determinate"], true);
  EXPECT_EQ(doc["determinacy"]["reason"], "GeometryArrangement");
  EXPECT_EQ(doc["determinacy"]["mark_count"], 3);
}

TEST(Cli, DeterminateEmptyAndPencil) {
  EXPECT_EQ(InvokeJson({"determinate", Fixture("empty.shape")})["determinacy"]["reason"],
            "EmptyArrangement");
  json x = InvokeJson({"determinate", Fixture("x_shape.shape")});
  EXPECT_EQ(x["determinacy"]["determinate"], false);
  EXPECT_EQ(x["determinacy"]["reason"], "FewerThanTwoMarks");
}

TEST(Cli, ClassifySquare) {
  json doc = InvokeJson({"classify", Fixture("square.shape")});
  EXPECT_EQ(doc["geometry_class"], "NearLinearSpace");
  EXPECT_EQ(doc["geometry_checks"]["linear_space"]["defect"], "PointsNotConnected");
  EXPECT_EQ(doc["geometry_checks"]["linear_space"]["witness"]["points"],
            json::array({"a", "d"}));
}

TEST(Cli, ReduceReportsMerges) {
  Result r = Invoke({"reduce", Fixture("overlap.shape")});
  ASSERT_EQ(r.code, kOk);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["shape"]["segments"], json::parse(R"([["0","0","3","0"]])"));
  EXPECT_NE(r.err.find("reduced records on lines 2, 3"), std::string::npos) << r.err;
  EXPECT_EQ(doc["diagnostics"][Fixture("overlap.shape")].size(), 1u);
}

TEST(Cli, ArrangementReportsLinesAndRationalPoints) {
  json doc = InvokeJson({"arrangement", Fixture("triangle.shape")});
  EXPECT_EQ(doc["arrangement"]["lines"], json::parse("[[0,1,0],[2,-1,0],[2,1,-4]]"));
  EXPECT_EQ(doc["arrangement"]["points"], json::parse(R"([["0","0"],["1","2"],["2","0"]])"));
  EXPECT_EQ(doc["axiom_report"]["valid"], true);
}

TEST(Cli, IncidenceFlags) {
  json doc = InvokeJson({"incidence", Fixture("triangle.shape")});
  EXPECT_EQ(doc["incidence"]["flags"].size(), 6u);
  EXPECT_EQ(doc["incidence"]["points"]["b"], json::parse(R"(["1","2"])"));
  EXPECT_EQ(doc["incidence"]["lines"]["C"], json::parse("[2,1,-4]"));
}

TEST(Cli, NaiveSumReportsMissingMarks) {
  json doc = InvokeJson({"sum", Fixture("crossing_a.shape"), Fixture("crossing_b.shape"), "--naive"});
  EXPECT_EQ(doc["axiom_report"]["valid"], true);
  EXPECT_EQ(doc["arrangement"]["point_count"], 4);
  const json& naive = doc["naive"];
  EXPECT_EQ(naive["axiom_report"]["valid"], false);
  EXPECT_TRUE(naive["axiom_report"]["violations_rule1"].empty());
  EXPECT_EQ(naive["axiom_report"]["violations_rule2"],
            json::parse("[[[0,1,-1],[1,0,-2]],[[0,1,0],[1,0,-2]]]"));
  EXPECT_EQ(naive["matches_definitional"], false);
}

TEST(Cli, DiffAndProductWithoutNaive) {
  json diff = InvokeJson({"diff", Fixture("square.shape"), Fixture("segment.shape")});
  EXPECT_FALSE(diff.contains("naive"));
  EXPECT_EQ(diff["shape"]["segment_count"], 3);
  json prod = InvokeJson({"product", Fixture("square.shape"), Fixture("segment.shape")});
  EXPECT_EQ(prod["shape"]["segments"], json::parse(R"([["0","0","1","0"]])"));
}

TEST(Cli, ValidateRawSets) {
  json one = InvokeJson({"validate", Fixture("point_on_one_line.json")});
  EXPECT_EQ(one["axiom_report"]["valid"], false);
  EXPECT_EQ(one["axiom_report"]["violations_rule1"], json::parse(R"([["0","0"]])"));

  json pappus = InvokeJson({"validate", Fixture("pappus.json")});
  EXPECT_EQ(pappus["axiom_report"]["valid"], false);
  EXPECT_EQ(pappus["geometry_checks"]["point_line_geometry"]["holds"], true);

  json desargues = InvokeJson({"validate", Fixture("desargues.json")});
  EXPECT_EQ(desargues["axiom_report"]["valid"], false);
  EXPECT_EQ(desargues["geometry_checks"]["point_line_geometry"]["holds"], true);
}

TEST(Cli, RenderAndLevi) {
  Result svg = Invoke({"render", Fixture("triangle.shape")});
  ASSERT_EQ(svg.code, kOk);
  EXPECT_EQ(svg.out.rfind("<?xml", 0), 0u);
  Result dot = Invoke({"levi", Fixture("triangle.shape")});
  ASSERT_EQ(dot.code, kOk);
  EXPECT_EQ(dot.out.rfind("graph levi {", 0), 0u);
}

TEST(Cli, InvalidInputExitsWithOne) {
  EXPECT_EQ(Invoke({}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"frobnicate", Fixture("triangle.shape")}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"sum", Fixture("triangle.shape")}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"classify", Fixture("triangle.shape"), "--naive"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"classify", "/nonexistent.shape"}).code, kInvalidInput);

  auto dir = std::filesystem::temp_directory_path() / "shapegeo_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.shape") << "seg 0 0 0 0\n";
  Result bad = Invoke({"reduce", (dir / "bad.shape").string()});
  EXPECT_EQ(bad.code, kInvalidInput);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos) << bad.err;
  std::ofstream(dir / "bad.json") << R"({"lines": [[0, 0, 1]]})";
  EXPECT_EQ(Invoke({"validate", (dir / "bad.json").string()}).code, kInvalidInput);
  std::ofstream(dir / "bad2.json") << "{not json";
  EXPECT_EQ(Invoke({"validate", (dir / "bad2.json").string()}).code, kInvalidInput);
}

TEST(Cli, HelpExitsWithZero) {
  Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("determinate"), std::string::npos);
}

// The installed binary, invoked through the shell: exit codes and
// byte-identical output across runs.
TEST(CliBinary, RepeatedRunsAreByteIdentical) {
  auto capture = [](const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    status = pclose(pipe);
    return out;
  };
  const std::string bin = SHAPEGEO_CLI_PATH;
  for (const std::string& args :
       {"determinate " + Fixture("triangle.shape"), "render " + Fixture("square.shape"),
        "levi " + Fixture("pencil.shape"),
        "sum " + Fixture("crossing_a.shape") + " " + Fixture("crossing_b.shape") + " --naive"}) {
    int s1 = 0;
    int s2 = 0;
    std::string first = capture(bin + " " + args + " 2>/dev/null", s1);
    std::string second = capture(bin + " " + args + " 2>/dev/null", s2);
    EXPECT_EQ(WEXITSTATUS(s1), 0) << args;
    EXPECT_FALSE(first.empty()) << args;
    EXPECT_EQ(first, second) << args;
  }
  int status = 0;
  capture(bin + " nope 2>/dev/null", status);
  EXPECT_EQ(WEXITSTATUS(status), 1);
}

}  // namespace
}  // namespace shapegeo::cli

#include "cli.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include <json.hpp>

namespace {

const std::string kData = ENDHERED_DATA_DIR;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "endhered");
  std::ostringstream out, err;
  const int code = endhered::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EnumerateText) {
  const auto r = run({"enumerate", "--pattern", "21", "--max-n", "9", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("21505552"), std::string::npos);
  EXPECT_NE(r.out.find("10157440"), std::string::npos);
}

TEST(Cli, EnumerateJsonAndCsv) {
  const auto json = run({"enumerate", "--pattern", "132", "--max-n", "9", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc.at("pattern"), "132");
  bool found = false;
  for (const auto& e : doc.at("entries")) {
    if (e[0] == 9 && e[1] == 3) found = e[2] == "15";
  }
  EXPECT_TRUE(found);
  const auto csv = run({"enumerate", "--pattern", "321", "--max-n", "6", "--format", "csv"});
  EXPECT_NE(csv.out.find("6,0,10022\n"), std::string::npos);
}

TEST(Cli, Count) {
  const auto r = run({"count", "--dotbracket", "((((....))))", "--pattern", "21"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(run({"count", "--matching", "1-6 2-5 3-4", "--pattern", "321"}).out, "1\n");
}

TEST(Cli, Collapse) {
  const auto r = run({"collapse", "--dotbracket", "..(((.((..(((....))).(((.....))))))))..", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "(()())\n");
}

TEST(Cli, Twist) {
  EXPECT_EQ(run({"twist", "--side", "right", "--matching", "1-4 2-3"}).out, "1-3 2-4\n");
  EXPECT_EQ(run({"twist", "--side", "sideways", "--matching", "1-4 2-3"}).code, 2);
}

TEST(Cli, Validate) {
  const auto r = run({"validate", "--dotbracket", "([)]"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pseudoknot"), std::string::npos);
}

TEST(Cli, Corpus) {
  const auto r = run({"corpus", "--input", kData + "/published_structures_fr3d.tsv", "analyze", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("132").at("secondary").at("ids"), nlohmann::json::array({"7K16"}));
  const auto scatter = run({"corpus", "--input", kData + "/published_structures.jsonl", "scatter", "--format", "csv"});
  ASSERT_EQ(scatter.code, 0) << scatter.err;
  EXPECT_EQ(scatter.out.substr(0, 27), "id,size,count_21,count_321\n");
  EXPECT_EQ(run({"corpus", "--input", kData + "/missing.tsv", "brackets"}).code, 1);
}

TEST(Cli, VerifyAndSample) {
  const auto v = run({"verify", "--max-n", "5"});
  ASSERT_EQ(v.code, 0) << v.out << v.err;
  const auto a = run({"sample", "--n", "50", "--samples", "2000", "--seed", "9", "--format", "json"});
  const auto b = run({"sample", "--n", "50", "--samples", "2000", "--seed", "9", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_LT(nlohmann::json::parse(a.out).at("tv_distance").get<double>(), 0.1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "--pattern", "21"}).code, 2);
  EXPECT_EQ(run({"count", "--pattern", "21", "--matching", "1-2", "--dotbracket", "()"}).code, 2);
  const auto bad = run({"count", "--pattern", "21", "--dotbracket", "(()"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"enumerate", "--pattern", "1234"}).code, 1);
  // Trailing shell comma becomes part of the structure text.
  EXPECT_EQ(run({"collapse", "--dotbracket", "(()),"}).code, 1);
}

}  // namespace

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ncv/cli/run.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ncv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ncv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST(Cli, ECountText) {
  Outcome o = run({"ecount-nonorient", "--rho", "1", "--n", "2", "--format", "text"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "3*q^4 - 2*q^3 - 3*q^2 + 2\n");
}

TEST(Cli, JsonSchema) {
  Outcome o = run({"involutions", "--nmax", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = parse(o);
  EXPECT_EQ(j["subcommand"], "involutions");
  EXPECT_EQ(j["inputs"]["nmax"], 3);
  ASSERT_EQ(j["results"].size(), 3u);
  EXPECT_EQ(j["results"][1]["name"], "I_2");
  EXPECT_EQ(j["results"][1]["polynomial"], "q^2 + q + 2");
  EXPECT_TRUE(j["results"][1]["verdict"].is_null());
  EXPECT_TRUE(j["timing"].is_null());
  EXPECT_EQ(run({"involutions", "--nmax", "3"}).out, o.out);

  auto timed = parse(run({"involutions", "--nmax", "2", "--timing"}));
  EXPECT_TRUE(timed["timing"].is_number());
}

TEST(Cli, VerifyIdentity) {
  Outcome o = run({"verify", "i_star_product", "--degree", "8"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  auto j = parse(o);
  for (const auto& r : j["results"]) EXPECT_EQ(r["verdict"], "pass");
  EXPECT_EQ(j["inputs"]["degree"], 8);

  EXPECT_EQ(run({"verify", "lemma_rk1"}).code, 0);
  EXPECT_EQ(run({"verify", "maintheo", "--trials", "2", "--seed", "5"}).code, 0);
  EXPECT_EQ(run({"verify", "criterion-1", "--format", "text"}).code, 0);
  EXPECT_EQ(run({"verify", "no_such_check"}).code, 2);
  EXPECT_EQ(run({"verify", "i_log", "--degree", "2"}).code, 2);
}

TEST(Cli, OraclePunctured) {
  Outcome o = run({"oracle", "punctured", "--r", "1", "--k", "1", "--n", "2", "--q", "5", "--eigenvalues", "2,3"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto j = parse(o);
  EXPECT_EQ(j["subcommand"], "oracle punctured");
  std::map<std::string, nlohmann::json> rows;
  for (const auto& r : j["results"]) rows[r["name"]] = r;
  EXPECT_EQ(rows["count"]["value"], "120");
  EXPECT_EQ(rows["group_order"]["value"], "480");
  EXPECT_EQ(rows["e_count"]["value"], "1/4");
  EXPECT_EQ(rows["formula"]["value"], "120");
  EXPECT_EQ(rows["formula"]["verdict"], "equal");

  Outcome neg = run({"oracle", "punctured", "--r", "1", "--q", "5", "--eigenvalues", "-1,-1", "--format", "csv"});
  EXPECT_EQ(neg.code, 0) << neg.err;
  EXPECT_NE(neg.out.find("formula,"), std::string::npos);
  EXPECT_NE(neg.out.find(",equal"), std::string::npos);
}

TEST(Cli, OtherOracles) {
  EXPECT_EQ(run({"oracle", "nonorient", "--n", "2", "--q", "3", "--r", "3"}).code, 0);
  EXPECT_EQ(run({"oracle", "orbits", "--q", "5", "--dmax", "3"}).code, 0);
  Outcome c = run({"oracle", "correspondence", "--n", "2", "--q", "3", "--format", "text"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("twisted = 384"), std::string::npos);
  EXPECT_EQ(run({"oracle", "correspondence", "--n", "2", "--q", "3", "--eigenvalues", "1,2"}).code, 0);
}

TEST(Cli, PuncturedValues) {
  EXPECT_EQ(run({"hh", "--r", "1", "--mu", "2", "--format", "text"}).out, "1/(z^2 + 1)\n");
  EXPECT_EQ(run({"ecount-punctured", "--r", "1", "--k", "1", "--mu", "1,1", "--format", "text"}).out, "1/(q - 1)\n");
  Outcome m = run({"mixed-poincare", "--r", "1", "--mu", "1", "--format", "latex"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("\\frac"), std::string::npos);
}

TEST(Cli, Macdonald) {
  auto j = parse(run({"macdonald", "--lambda", "2"}));
  std::map<std::string, std::string> coeffs;
  for (const auto& r : j["results"]) coeffs[r["name"]] = r["polynomial"];
  EXPECT_EQ(coeffs["m[2]"], "1");
  EXPECT_EQ(coeffs["m[1,1]"], "q + 1");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"ecount-nonorient", "--rho", "1"}).code, 2);
  EXPECT_EQ(run({"ecount-nonorient", "--rho", "1", "--n", "2", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"ecount-nonorient", "--rho", "-2", "--n", "2"}).code, 2);
  Outcome mismatch = run({"hh", "--r", "1", "--k", "2", "--mu", "2"});
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_NE(mismatch.err.find("components"), std::string::npos);
  EXPECT_EQ(run({"hh", "--r", "1", "--mu", "2|1"}).code, 2);
  Outcome nongeneric = run({"oracle", "punctured", "--r", "1", "--q", "5", "--eigenvalues", "1,1"});
  EXPECT_EQ(nongeneric.code, 2);
  EXPECT_NE(nongeneric.err.find("not generic"), std::string::npos);
  EXPECT_EQ(run({"oracle", "punctured", "--r", "1", "--q", "4", "--eigenvalues", "1"}).code, 2);
  Outcome budget = run({"oracle", "nonorient", "--n", "3", "--q", "5", "--r", "1"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_NE(budget.err.find("budget"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFile) {
  std::string path = ::testing::TempDir() + "ncv_cli_out.json";
  Outcome o = run({"ecount-nonorient", "--rho", "0", "--n", "2", "--out", path});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  auto j = nlohmann::json::parse(ss.str());
  EXPECT_EQ(j["results"][0]["polynomial"], "q + 3");
  std::remove(path.c_str());
}

TEST(Cli, ReportFailureVerdicts) {
  ncv::cli::Report r;
  r.subcommand = "x";
  r.value("a", "1", "pass");
  EXPECT_FALSE(r.failed());
  r.value("b", "2", "note");
  EXPECT_FALSE(r.failed());
  r.value("c", "3", "different");
  EXPECT_TRUE(r.failed());
  std::string text = ncv::cli::render(r, "text");
  EXPECT_NE(text.find("1 of 3 checks failed"), std::string::npos);
  std::string csv = ncv::cli::render(r, "csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,value,verdict");
}

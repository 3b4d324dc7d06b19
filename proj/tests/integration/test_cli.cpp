#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "lieder/io.hpp"
#include "oracles.hpp"

using namespace lieder;
using lieder::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Run lieder_run(std::vector<std::string> args) {
  args.insert(args.begin(), "lieder");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("lieder-cli-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

TEST(Cli, ValidateCatalogAndFiles) {
  TempDir dir;
  EXPECT_EQ(lieder_run({"validate", "sl2"}).code, 0);
  const auto bad = dir.write("bad.lie", "field Q\ndim 3\nb 1 2 : 3\nb 1 3 : 1\n");
  const auto r = lieder_run({"--json", "validate", bad});
  EXPECT_EQ(r.code, cli::kExitViolation);
  const auto doc = r.json();
  EXPECT_EQ(doc["status"], "violation");
  EXPECT_EQ(doc["results"]["violation"]["kind"], "jacobi");
  // the same file is refused by every other command
  EXPECT_EQ(lieder_run({"series", bad}).code, cli::kExitUsage);
}

TEST(Cli, ParseErrorsNameTheLine) {
  TempDir dir;
  const auto bad = dir.write("conflict.lie", "field Q\ndim 2\nb 1 2 : 2\nb 2 1 : 2\n");
  const auto r = lieder_run({"series", bad});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(lieder_run({}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"series", "nosuch"}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"series", "sl2", "--ideal", "span:1"}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"series", "sl2", "--ideal", "derived:x"}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"counterexample", "--p", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"check", "--suite", "degree", "--field", "GF(5)", "--count", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(lieder_run({"--help"}).code, 0);
}

TEST(Cli, SeriesReport) {
  const auto doc = lieder_run({"--json", "series", "heisenberg"}).json();
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["tool"], "lieder");
  EXPECT_EQ(doc["command"], "series");
  EXPECT_EQ(doc["results"]["dims"], Json::array({3, 1, 0}));
  EXPECT_EQ(doc["results"]["derived_length"], 2);
  const auto sl = lieder_run({"--json", "series", "sl2"}).json();
  EXPECT_TRUE(sl["results"]["derived_length"].is_null());
  const auto c = lieder_run({"--json", "series", "heisenberg", "--ideal", "closure:1"}).json();
  EXPECT_EQ(c["results"]["dims"], Json::array({2, 0}));
}

TEST(Cli, DerReport) {
  const auto doc = lieder_run({"--json", "der", "sl2"}).json();
  EXPECT_EQ(doc["results"]["dim"], 3);
  EXPECT_EQ(doc["results"]["outer_dim"], 0);
  const auto h = lieder_run({"--json", "der", "heisenberg"}).json();
  EXPECT_EQ(h["results"]["dim"], 6);
  EXPECT_EQ(h["results"]["inner_dim"], 2);
}

TEST(Cli, RadicalAndBudget) {
  const auto doc = lieder_run({"--json", "radical", "sl2+heisenberg"}).json();
  EXPECT_EQ(doc["results"]["radical"]["dim"], 3);
  EXPECT_EQ(doc["results"]["method"], "killing-char0");
  const auto over = lieder_run({"--json", "radical", "jacobson:5", "--budget", "1000"});
  EXPECT_EQ(over.code, cli::kExitBudget);
  EXPECT_EQ(over.json()["results"]["required"], 30517578125ull);

  ::setenv(cli::kBudgetEnv, "50", 1);
  EXPECT_EQ(lieder_run({"radical", "sl2", "--field", "GF(5)"}).code, cli::kExitBudget);
  ::unsetenv(cli::kBudgetEnv);
  EXPECT_EQ(lieder_run({"radical", "sl2", "--field", "GF(5)"}).code, 0);
}

TEST(Cli, CharacteristicWitness) {
  const auto r = lieder_run({"--json", "characteristic", "jacobson:3"});
  EXPECT_EQ(r.code, 0);  // hypotheses fail, so a non-characteristic radical is no violation
  const auto doc = r.json();
  EXPECT_FALSE(doc["results"]["characteristic"].get<bool>());
  EXPECT_FALSE(doc["results"]["theorem_hypotheses_met"].get<bool>());
  EXPECT_TRUE(doc["results"]["witness"]["verified"].get<bool>());
  const auto q = lieder_run({"--json", "characteristic", "sl2+affine"}).json();
  EXPECT_TRUE(q["results"]["characteristic"].get<bool>());
}

TEST(Cli, DClosureWithDerivationFile) {
  TempDir dir;
  const auto alg = dir.write("aff.lie", "field Q\ndim 2\nb 1 2 : 2\n");
  // D = diag(0, 1) is the inner derivation ad(x)
  const auto der = dir.write("d.der", "dim 2\n0 0\n0 1\n");
  const auto doc = lieder_run({"--json", "dclosure", alg, "--derivation", der, "--ideal", "derived:1", "--k", "3"}).json();
  EXPECT_EQ(doc["results"]["stabilized_at"], 0);
  EXPECT_EQ(doc["results"]["terms"][3]["dim"], 1);
  const auto bad = dir.write("bad.der", "dim 2\n1 0\n0 1\n");
  EXPECT_EQ(lieder_run({"dclosure", alg, "--derivation", bad}).code, cli::kExitUsage);
}

TEST(Cli, DClosureJacobsonDt) {
  const auto doc = lieder_run({"--json", "dclosure", "jacobson:5", "--derivation", "dt", "--ideal", "radical",
                               "--k", "1", "--budget", "1"});
  // the radical selector needs a brute-force search, which the budget forbids
  EXPECT_EQ(doc.code, cli::kExitBudget);
  const auto ok = lieder_run({"--json", "dclosure", "jacobson:3", "--derivation", "dt", "--ideal", "radical", "--k", "1"});
  EXPECT_EQ(ok.code, 0);
  const auto j = ok.json();
  EXPECT_EQ(j["results"]["terms"][1]["dim"], 9);
  EXPECT_FALSE(j["results"]["terms"][1]["solvability_bound"]["hypotheses_met"].get<bool>());
}

TEST(Cli, BoundsTable) {
  const auto doc = lieder_run({"--json", "bounds", "--n", "1", "--kmax", "5"}).json();
  EXPECT_EQ(doc["results"]["values"], Json::array({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(doc["results"]["polynomial"], Json::array({"1", "1"}));
  const auto two = lieder_run({"--json", "bounds", "--n", "2", "--kmax", "3"}).json();
  EXPECT_EQ(two["results"]["values"], Json::array({2, 6, 12, 20}));
}

TEST(Cli, CounterexampleP5) {
  const auto r = lieder_run({"--json", "counterexample", "--p", "5"});
  EXPECT_EQ(r.code, 0);
  const auto doc = r.json();
  EXPECT_EQ(doc["results"]["radical"]["dim"], 12);
  EXPECT_EQ(doc["results"]["dim"], 15);
  EXPECT_EQ(doc["results"]["derived_length"], 3);
  EXPECT_FALSE(doc["results"]["characteristic"].get<bool>());
  EXPECT_EQ(doc["results"]["admissible_depth"], 2);
}

TEST(Cli, CheckIsDeterministic) {
  const std::vector<std::string> args{"--json", "check", "--suite", "power", "--seed", "5", "--count", "20"};
  const auto a = lieder_run(args);
  const auto b = lieder_run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["results"]["violations"], 0);
}

TEST(Cli, DigestDependsOnContentOnly) {
  TempDir dir;
  const auto f1 = dir.write("a.lie", "# one\nfield Q\ndim 3\nb 1 2 : 3\n");
  const auto f2 = dir.write("b.lie", "field Q\ndim 3\nb 2 1 : -1*3   # same algebra\n");
  const auto d1 = lieder_run({"--json", "series", f1}).json()["inputs"]["digest"];
  const auto d2 = lieder_run({"--json", "series", f2}).json()["inputs"]["digest"];
  const auto d3 = lieder_run({"--json", "series", "heisenberg"}).json()["inputs"]["digest"];
  EXPECT_EQ(d1, d2);
  EXPECT_EQ(d1, d3);
}

TEST(Cli, SubspaceJsonRoundTrip) {
  gen::Source src(51);
  for (const auto f : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto n = static_cast<std::size_t>(src.integer(1, 6));
      const auto s = src.subspace(n, f);
      const auto j = Json::parse(cli::subspace_to_json(s).dump());
      EXPECT_EQ(cli::subspace_from_json(j, n, f), s);
    }
  }
}

}  // namespace

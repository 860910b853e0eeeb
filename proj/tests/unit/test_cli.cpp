#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracles.hpp"
#include "tspectral/cli.hpp"
#include "tspectral/io.hpp"

using namespace tspectral;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return oracle::fixture(name); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tspectral_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

class SeedEnv {
 public:
  explicit SeedEnv(const char* value) {
    if (value)
      setenv(cli::seed_env, value, 1);
    else
      unsetenv(cli::seed_env);
  }
  ~SeedEnv() { unsetenv(cli::seed_env); }
};

}  // namespace

TEST(Cli, TprodExample) {
  const fs::path out = scratch("c2.json");
  const Result r = call({"tprod", fx("A2.json"), fx("B2.json"), "-o", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("trace: 10.0000"), std::string::npos) << r.out;
  EXPECT_EQ(read_tensor(out), read_tensor(fx("C2.json")));

  const Result dense = call({"tprod", fx("A2.json"), fx("B2.json"), "--path", "dense"});
  EXPECT_EQ(dense.code, 0);
  EXPECT_EQ(dense.out, call({"tprod", fx("A2.json"), fx("B2.json")}).out);

  const Result half = call({"--convention", "slice1", "tprod", fx("A2.json"), fx("B2.json")});
  EXPECT_NE(half.out.find("trace: 5.0000"), std::string::npos) << half.out;
}

TEST(Cli, EigExample) {
  const Result r = call({"eig", fx("A2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5.4142\n2.5858\n2.0000\n0.0000\n");
  EXPECT_EQ(call({"eig", "--dense", fx("A2.json")}).out, r.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"tprod", fx("A2.json")}).code, 2);
  EXPECT_EQ(call({"dist", fx("A2.json"), fx("B2.json"), "--metric", "nope"}).code, 2);
  EXPECT_EQ(call({"eig", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(call({"sweep", "no-such-property"}).code, 2);
  EXPECT_EQ(call({"geodesic", fx("I22.json"), fx("I22.json")}).code, 2);

  const fs::path i33 = scratch("i33.json");
  ASSERT_EQ(call({"gen", "psd", "--n", "3", "--p", "2", "-o", i33.string()}).code, 0);
  EXPECT_EQ(call({"tprod", fx("A2.json"), i33.string()}).code, 2);

  // Failed preconditions and checks.
  EXPECT_EQ(call({"dist", fx("A3.json"), fx("B3.json"), "--metric", "bw"}).code, 1);
  EXPECT_EQ(call({"geodesic", fx("A2.json"), fx("I22.json"), "--t", "0.5"}).code, 1);
  EXPECT_EQ(call({"verify", fx("A3_literal.json")}).code, 1);
  EXPECT_EQ(call({"bounds", "vn", fx("A3.json"), fx("B3.json")}).code, 1);

  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, VerifyAndBounds) {
  EXPECT_EQ(call({"verify", fx("A2.json")}).code, 0);
  EXPECT_EQ(call({"verify", "--pd", fx("A2.json")}).code, 1);
  EXPECT_EQ(call({"verify", "--pd", fx("I22.json")}).code, 0);

  const Result vn = call({"bounds", "vn", fx("I22.json"), fx("I22.json")});
  EXPECT_EQ(vn.code, 0);
  EXPECT_NE(vn.out.find("value: 4.0000"), std::string::npos) << vn.out;
  EXPECT_NE(vn.out.find("satisfied: yes"), std::string::npos);

  const Result sym = call({"bounds", "symmetrized", fx("A1.json")});
  EXPECT_EQ(sym.code, 0) << sym.out;
  EXPECT_NE(sym.out.find("mu_min: 0.4384"), std::string::npos) << sym.out;
  EXPECT_NE(sym.out.find("mu_max: 4.5616"), std::string::npos);

  const Result sandwich = call({"bounds", "sandwich", fx("A2.json"), fx("I22.json")});
  EXPECT_NE(sandwich.out.find("value: 40.0000"), std::string::npos) << sandwich.out;

  const Result kf = call({"bounds", "kyfan", fx("A2.json"), "--k", "1"});
  EXPECT_EQ(kf.code, 0) << kf.err;
  EXPECT_NE(kf.out.find("value: 7.4142"), std::string::npos) << kf.out;
  EXPECT_EQ(call({"bounds", "kyfan", fx("A2.json"), "--k", "3"}).code, 1);

  EXPECT_EQ(call({"bounds", "relax", fx("A1.json"), fx("A3_literal.json")}).code, 1);
  EXPECT_EQ(call({"bounds", "relax", fx("A1.json"), fx("A2.json")}).code, 0);
}

TEST(Cli, DistPrintsFullPrecision) {
  const Result r = call({"dist", fx("A3.json"), fx("B3.json"), "--metric", "bw-principal"});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(r.out.rfind("distance: 0.70548", 0), 0u) << r.out;
  const double d = std::stod(r.out.substr(10));
  EXPECT_NEAR(d, 0.7054867277404278, 1e-6);

  const Result fro = call({"dist", fx("I22.json"), fx("I22.json"), "--metric", "fro"});
  EXPECT_EQ(fro.out, "distance: 0\n");
}

TEST(Cli, GenIsDeterministic) {
  SeedEnv env(nullptr);
  const Result a = call({"gen", "psd", "--n", "3", "--p", "4", "--seed", "7"});
  const Result b = call({"gen", "psd", "--n", "3", "--p", "4", "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, call({"gen", "psd", "--n", "3", "--p", "4", "--seed", "8"}).out);

  const Tensor3 t = tensor_from_json(a.out);
  EXPECT_EQ(t.rows(), 3);
  EXPECT_EQ(t.tubes(), 4);

  const fs::path file = scratch("gen_psd.json");
  ASSERT_EQ(call({"gen", "psd", "--n", "3", "--p", "4", "--seed", "7", "-o", file.string()}).code,
            0);
  EXPECT_EQ(call({"verify", "--psd", file.string()}).code, 0);

  const Result tiny = call({"gen", "random", "--n", "1", "--p", "1"});
  EXPECT_EQ(tiny.code, 0);
  EXPECT_EQ(tensor_from_json(tiny.out).size(), 1u);
  EXPECT_EQ(call({"gen", "random", "--n", "0"}).code, 2);
}

TEST(Cli, SeedFromEnvironment) {
  const std::vector<std::string> args{"gen", "hermitian", "--n", "2", "--p", "3"};
  std::string with_env, explicit_seed, unset;
  {
    SeedEnv env("42");
    with_env = call(args).out;
  }
  {
    SeedEnv env(nullptr);
    unset = call(args).out;
    explicit_seed = call({"gen", "hermitian", "--n", "2", "--p", "3", "--seed", "42"}).out;
    EXPECT_EQ(unset, call({"gen", "hermitian", "--n", "2", "--p", "3", "--seed", "0"}).out);
  }
  EXPECT_EQ(with_env, explicit_seed);
  {
    SeedEnv env("forty-two");
    EXPECT_EQ(call(args).code, 2);
  }
}

TEST(Cli, GeodesicSamples) {
  const Result r = call({"geodesic", fx("I22.json"), fx("A2.json"), "--samples", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 12);
  ASSERT_EQ(r.out.rfind("t,trace\n0,", 0), 0u) << r.out;
  EXPECT_NEAR(std::stod(r.out.substr(10)), 4.0, 1e-12);
  EXPECT_NE(r.out.find("\n1,10\n"), std::string::npos) << r.out;

  const Result one = call({"geodesic", fx("I22.json"), fx("A2.json"), "--t", "1"});
  EXPECT_EQ(one.out, "trace: 10.0000\n");
}

TEST(Cli, SweepRuns) {
  const Result r = call({"sweep", "sandwich", "--trials", "5", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("sandwich: 5/5 passed", 0), 0u) << r.out;
}

TEST(Cli, ReportIsDeterministicApartFromTiming) {
  const fs::path p1 = scratch("r1.json"), p2 = scratch("r2.json");
  const std::vector<std::string> tail{"bounds", "vn", fx("A2.json"), fx("A2.json")};
  std::vector<std::string> a1{"--report", p1.string()}, a2{"--report", p2.string()};
  a1.insert(a1.end(), tail.begin(), tail.end());
  a2.insert(a2.end(), tail.begin(), tail.end());
  ASSERT_EQ(call(a1).code, 0);
  ASSERT_EQ(call(a2).code, 0);

  auto j1 = nlohmann::json::parse(slurp(p1));
  auto j2 = nlohmann::json::parse(slurp(p2));
  EXPECT_EQ(j1["command"], "bounds");
  ASSERT_TRUE(j1.contains("timing"));
  EXPECT_TRUE(j1["timing"].contains("total"));
  ASSERT_EQ(j1["bound_reports"].size(), 1u);
  EXPECT_EQ(j1["bound_reports"][0]["satisfied"], true);
  j1.erase("timing");
  j2.erase("timing");
  EXPECT_EQ(j1.dump(), j2.dump());
}

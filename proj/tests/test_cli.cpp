#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "plpoly_cli.hpp"

using plpoly::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = plpoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Coefficients) {
  const Result r = run({"coeffs", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"n\":3,\"coeffs\":[\"0\",\"3\",\"2\",\"1\"]}\n");
  EXPECT_EQ(run({"coeffs", "--n", "2", "--format", "csv"}).out, "k,coefficient\n0,0\n1,2\n2,1\n");
}

TEST(Cli, Classify) {
  const Result r = run({"phase", "classify", "--x", "-0.9+0i"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"label\":\"R2\"}\n");
  EXPECT_EQ(run({"phase", "classify", "--x", "0.5"}).out, "{\"label\":\"R1\"}\n");
}

TEST(Cli, VerifyFactorization) {
  const Result r = run({"verify", "factorization", "--samples", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_LT(j.at("metrics").at(0).at("value").get<double>(), 1e-9);
  EXPECT_TRUE(j.at("passed").get<bool>());
}

TEST(Cli, DeterministicAcrossJobs) {
  const Result a = run({"verify", "bounds", "--samples", "40", "--seed", "3", "--jobs", "1"});
  const Result b = run({"verify", "bounds", "--samples", "40", "--seed", "3", "--jobs", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "dominance", "--samples", "30", "--seed", "5"}).out,
            run({"verify", "dominance", "--samples", "30", "--seed", "5", "--jobs", "3"}).out);
}

TEST(Cli, AsymRegions) {
  const Result automatic = run({"asym", "--n", "100", "--x", "0.5+0i", "--compare"});
  EXPECT_EQ(automatic.code, 0) << automatic.err;
  const Json j = Json::parse(automatic.out);
  EXPECT_EQ(j.at("region"), "r1");
  EXPECT_LT(j.at("relative_error").get<double>(), 0.15);

  EXPECT_EQ(Json::parse(run({"asym", "--n", "50", "--x", "-0.4+0i"}).out).at("region"), "osc");
  EXPECT_EQ(Json::parse(run({"asym", "--n", "50", "--x", "-0.9+0.01i"}).out).at("region"), "r2");

  const Result refused = run({"asym", "--n", "100", "--x", "-0.9+0i", "--region", "r1"});
  EXPECT_EQ(refused.code, 1);
  EXPECT_NE(refused.err.find("--region r2"), std::string::npos);
  EXPECT_EQ(run({"asym", "--n", "100", "--x", "0+0i"}).code, 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"eval", "--n", "3", "--x", "zz"}).code, 1);
  EXPECT_EQ(run({"eval", "--n", "3", "--x", "0.5 + 1i"}).code, 1);
  EXPECT_EQ(run({"coeffs"}).code, 1);
  EXPECT_EQ(run({"nosuch"}).code, 1);
  EXPECT_EQ(run({"coeffs", "--n", "3", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"coeffs", "--n", "3", "--out", "/nonexistent-dir/q.json"}).code, 3);
}

TEST(Cli, HelpNamesTheFormula) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"coeffs", "--help"}, {"asym", "--help"}, {"phase", "boundary", "--help"},
        {"verify", "factorization", "--help"}, {"zeros", "predict", "--help"}, {"grid", "--help"}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.find("Q_n") != std::string::npos || r.out.find("L_") != std::string::npos ||
                r.out.find("Li3") != std::string::npos || r.out.find("ln P") != std::string::npos)
        << args.front();
  }
  EXPECT_NE(run({"asym", "--help"}).out.find("6 pi n^{4/3}"), std::string::npos);
}

TEST(Cli, EvalAndPrecisionOverride) {
  const Result r = run({"eval", "--n", "10", "--x", "1+0i"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("value").at("re").get<double>(), 500.0);
  EXPECT_EQ(j.at("precision_bits").get<long>(), 256);

  setenv("PLPOLY_PRECISION_BITS", "512", 1);
  EXPECT_EQ(Json::parse(run({"eval", "--n", "10", "--x", "1+0i"}).out).at("precision_bits").get<long>(), 512);
  setenv("PLPOLY_PRECISION_BITS", "12", 1);
  EXPECT_EQ(run({"eval", "--n", "10", "--x", "1+0i"}).code, 1);
  unsetenv("PLPOLY_PRECISION_BITS");
}

TEST(Cli, ZerosAndPrediction) {
  const Result r = run({"zeros", "--n", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 15), "re,im,residual\n");
  const Result p = run({"zeros", "predict", "--n", "100", "--match"});
  EXPECT_EQ(p.code, 0) << p.err;
  const Json j = Json::parse(p.out);
  EXPECT_LT(j.at("match").at("mean_distance").get<double>(), 1e-2);
}

TEST(Cli, BoundaryAndGridFiles) {
  const std::string path = ::testing::TempDir() + "plpoly_boundary.csv";
  EXPECT_EQ(run({"phase", "boundary", "--points", "6", "--out", path}).code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "theta,re,im,residual");
  std::remove(path.c_str());

  const Result g = run({"grid", "--n", "60", "--resolution", "7", "--jobs", "2"});
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.out.substr(0, 28), "re,im,label,region,rel_error");
  EXPECT_EQ(g.out, run({"grid", "--n", "60", "--resolution", "7"}).out);
}

TEST(Cli, Constants) {
  const Json j = Json::parse(run({"phase", "constants"}).out);
  EXPECT_NEAR(j.at("x_star").get<double>(), -0.8250030529, 1e-8);
  EXPECT_NEAR(j.at("theta_star_over_pi").get<double>(), 0.9517031251, 1e-6);
}

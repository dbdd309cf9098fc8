#include <gtest/gtest.h>

#include <sstream>

#include "plpoly/io.hpp"
#include "plpoly/zeros.hpp"

using namespace plpoly;

namespace {

bool contains(const RootSet& set, Complex z, double tol) {
  for (const Complex& r : set.roots)
    if (std::abs(r - z) < tol) return true;
  return false;
}

}  // namespace

TEST(Roots, SmallPolynomials) {
  const RootSet one = roots(1);
  ASSERT_EQ(one.roots.size(), 1u);
  EXPECT_EQ(one.roots[0], Complex(0.0, 0.0));

  const RootSet two = roots(2);
  ASSERT_EQ(two.roots.size(), 2u);
  EXPECT_TRUE(contains(two, 0.0, 1e-30));
  EXPECT_TRUE(contains(two, -2.0, 1e-14));

  const RootSet three = roots(3);
  ASSERT_EQ(three.roots.size(), 3u);
  EXPECT_TRUE(contains(three, Complex(-1.0, std::sqrt(2.0)), 1e-14));
  EXPECT_TRUE(contains(three, Complex(-1.0, -std::sqrt(2.0)), 1e-14));
  EXPECT_THROW(roots(0), DomainError);
  EXPECT_THROW(roots(401), DomainError);
}

class RootInvariants : public ::testing::TestWithParam<unsigned> {};

TEST_P(RootInvariants, ResidualConjugationProduct) {
  const unsigned n = GetParam();
  const mpfr_prec_t bits = 256;
  const RootSet set = roots(n, bits);
  ASSERT_EQ(set.roots.size(), n);
  EXPECT_TRUE(set.all_converged());
  const double limit = std::pow(2.0, -static_cast<double>(bits) / 4.0);
  for (double b : set.backward_errors) EXPECT_LT(b, limit);

  for (const Complex& r : set.roots) EXPECT_TRUE(contains(set, std::conj(r), 1e-12 * std::max(1.0, std::abs(r)))) << r;

  const Complex product = signed_root_product(set).to_complex();
  const double c1 = PlanePartitionTable::shared().get(n).coeffs[1].get_d();
  EXPECT_NEAR(product.real() / c1, 1.0, 1e-12);
  EXPECT_NEAR(product.imag() / c1, 0.0, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Degrees, RootInvariants, ::testing::Values(4u, 9u, 20u, 57u, 120u));

TEST(Predicted, InsideIntervalAndOrdered) {
  const double xs = phase_constants().x_star;
  for (unsigned n : {1u, 20u, 100u, 400u}) {
    const auto p = predicted_interval_zeros(n);
    double previous = 0.0;
    for (double v : p) {
      EXPECT_GT(v, xs);
      EXPECT_LT(v, previous);
      previous = v;
    }
  }
  const double grow = static_cast<double>(predicted_interval_zeros(400).size()) /
                      static_cast<double>(predicted_interval_zeros(50).size());
  EXPECT_NEAR(grow, 4.0, 0.8);
  for (double v : predicted_interval_zeros(60)) {
    const double phase = 0.75 * std::sqrt(3.0) * std::cbrt(2.0) * std::cbrt(3600.0) * std::cbrt(std::abs(trilog(v).real())) + pi / 6;
    EXPECT_NEAR(std::remainder(phase - pi / 2, pi), 0.0, 1e-9);
  }
}

TEST(Match, DegreeTwenty) {
  const RootSet set = roots(20);
  const ZeroMatchReport m = match_zeros(set, predicted_interval_zeros(20));
  EXPECT_EQ(m.pairs.size(), m.actual_in_window);
  EXPECT_FALSE(m.cardinality_mismatch());
  EXPECT_GT(m.pairs.size(), 0u);
}

TEST(Match, DegreeHundred) {
  const ZeroMatchReport m = match_zeros(roots(100), predicted_interval_zeros(100));
  EXPECT_LT(m.mean_distance, 1e-2);
  EXPECT_LT(m.max_distance, 5e-2);
}

TEST(Match, EmptyPrediction) {
  const ZeroMatchReport m = match_zeros(roots(1), {});
  EXPECT_TRUE(m.pairs.empty());
  EXPECT_EQ(m.max_distance, 0.0);
}

TEST(Export, CsvAndJson) {
  const RootSet set = roots(5);
  std::ostringstream os;
  set.write_csv(os);
  EXPECT_EQ(os.str().substr(0, 15), "re,im,residual\n");
  const Json j = to_json(set);
  EXPECT_EQ(j.at("roots").size(), 5u);
  EXPECT_TRUE(j.at("converged").get<bool>());
}

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "plpoly/core.hpp"
#include "plpoly/multiprecision.hpp"
#include "plpoly/parallel.hpp"

using namespace plpoly;

TEST(ParseComplex, Grammar) {
  EXPECT_EQ(parse_complex("-0.9+0i"), Complex(-0.9, 0.0));
  EXPECT_EQ(parse_complex("0.3-0.25i"), Complex(0.3, -0.25));
  EXPECT_EQ(parse_complex("1e-3+2E+1i"), Complex(1e-3, 20.0));
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_FALSE(parse_complex(""));
  EXPECT_FALSE(parse_complex("0.5 + 1i"));
  EXPECT_FALSE(parse_complex("abc"));
  EXPECT_FALSE(parse_complex("1+i"));
  EXPECT_FALSE(parse_complex("nan"));
}

TEST(SeriesTolerance, Validation) {
  EXPECT_NO_THROW(SeriesTolerance{}.validate());
  EXPECT_THROW((SeriesTolerance{0.0, 10}.validate()), std::invalid_argument);
  EXPECT_THROW((SeriesTolerance{1e-10, 0}.validate()), std::invalid_argument);
}

TEST(Ipow, ExactIntegerPowers) {
  EXPECT_EQ(ipow(Complex(0.0, 1.0), 4), Complex(1.0, 0.0));
  EXPECT_EQ(ipow(Complex(2.0, 0.0), 10), Complex(1024.0, 0.0));
  EXPECT_EQ(ipow(Complex(0.3, 0.1), 0), Complex(1.0, 0.0));
}

TEST(ParallelMap, OrderAndDeterminism) {
  auto square = [](std::size_t i) { return static_cast<long>(i * i); };
  const auto serial = parallel_map(1000, 1, square);
  const auto threaded = parallel_map(1000, 4, square);
  EXPECT_EQ(serial, threaded);
  EXPECT_EQ(threaded[31], 961);
  EXPECT_TRUE(parallel_map(0, 3, square).empty());
}

TEST(ParallelMap, PropagatesLowestIndexError) {
  try {
    parallel_map(20, 3, [](std::size_t i) -> int {
      if (i == 7 || i == 15) throw std::runtime_error("boom " + std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "boom 7");
  }
}

TEST(BigFloat, ArithmeticAndConversion) {
  const BigFloat a(1.5, 128), b(mpz_class("12345678901234567890123"), 128);
  EXPECT_EQ((a * a).to_double(), 2.25);
  EXPECT_NEAR((b / b).to_double(), 1.0, 1e-30);
  EXPECT_EQ(BigFloat(0.0, 64).sign(), 0);
  EXPECT_TRUE(BigFloat(128).is_zero());
  const BigComplex z(Complex(3.0, 4.0), 128);
  EXPECT_EQ(z.abs().to_double(), 5.0);
  EXPECT_EQ((z * conj(z)).to_complex(), Complex(25.0, 0.0));
}

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "plpoly/asymptotics.hpp"
#include "plpoly/exact_polynomials.hpp"
#include "plpoly/io.hpp"

using namespace plpoly;

namespace {

std::vector<long> as_longs(const PlanePartitionPolynomial& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST(Weights, DivisorSums) {
  EXPECT_EQ(log_derivative_weights(1), (std::vector<WeightTerm>{{1, 1}}));
  EXPECT_EQ(log_derivative_weights(2), (std::vector<WeightTerm>{{1, 4}, {2, 1}}));
  EXPECT_EQ(log_derivative_weights(6), (std::vector<WeightTerm>{{1, 36}, {2, 9}, {3, 4}, {6, 1}}));
  EXPECT_THROW(log_derivative_weights(0), DomainError);
}

TEST(Recurrence, SmallPolynomials) {
  EXPECT_EQ(as_longs(plane_partition_polynomial(0)), (std::vector<long>{1}));
  EXPECT_EQ(as_longs(plane_partition_polynomial(2)), (std::vector<long>{0, 2, 1}));
  EXPECT_EQ(as_longs(plane_partition_polynomial(3)), (std::vector<long>{0, 3, 2, 1}));
}

TEST(Enumeration, SmallCases) {
  EXPECT_EQ(as_longs(enumerate_by_trace(1)), (std::vector<long>{0, 1}));
  EXPECT_EQ(as_longs(enumerate_by_trace(2)), (std::vector<long>{0, 2, 1}));
  EXPECT_EQ(enumerate_by_trace(6).total(), 48);
  EXPECT_THROW(enumerate_by_trace(0), DomainError);
  EXPECT_THROW(enumerate_by_trace(13), DomainError);
}

TEST(Enumeration, AgreesWithRecurrence) {
  for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(enumerate_by_trace(n), plane_partition_polynomial(n)) << "n=" << n;
}

TEST(Recurrence, AgreesWithTraceProduct) {
  const auto table = oracle::trace_table(40);
  for (unsigned n = 0; n <= 40; ++n) {
    const auto p = plane_partition_polynomial(n);
    ASSERT_EQ(p.coeffs.size(), n + 1u);
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(p.coeffs[k].get_ui(), table[n][k]) << "n=" << n << " k=" << k;
  }
}

TEST(Recurrence, StructuralInvariants) {
  const auto pl = oracle::macmahon(60);
  mpz_class previous = 0;
  for (unsigned n = 1; n <= 60; ++n) {
    const auto p = plane_partition_polynomial(n);
    EXPECT_EQ(p.coeffs.front(), 0);
    EXPECT_EQ(p.coeffs.back(), 1);
    for (const auto& c : p.coeffs) EXPECT_GE(sgn(c), 0);
    EXPECT_EQ(p.total().get_ui(), pl[n]);
    EXPECT_GT(p.total(), previous);
    previous = p.total();
  }
  EXPECT_EQ(plane_partition_polynomial(10).total(), 500);
}

TEST(Evaluate, ExactIntegers) {
  EXPECT_EQ(evaluate(plane_partition_polynomial(2), 1.0, 64).value.to_complex(), Complex(3.0, 0.0));
  EXPECT_EQ(evaluate(plane_partition_polynomial(10), 1.0, 128).value.to_complex(), Complex(500.0, 0.0));
  for (unsigned n = 1; n <= 5; ++n)
    EXPECT_EQ(evaluate(plane_partition_polynomial(n), 0.0, 64).value.to_complex(), Complex(0.0, 0.0));
  EXPECT_THROW(evaluate(plane_partition_polynomial(3), 0.5, 32), DomainError);
}

TEST(Evaluate, ErrorEnvelopeCoversLongDoubleOracle) {
  const auto table = oracle::trace_table(30);
  for (const Complex x : {Complex{0.4, 0.3}, Complex{-0.7, 0.1}, Complex{0.9, -0.2}}) {
    const EvalResult r = evaluate(plane_partition_polynomial(30), x, 64);
    EXPECT_GE(r.abs_error_bound, 0.0);
    EXPECT_LT(std::abs(r.value.to_complex() - oracle::q_value(table, 30, x)),
              r.abs_error_bound + 1e-15 * std::abs(r.value.to_complex()));
  }
}

TEST(Evaluate, CancellationSentinel) {
  // On (x*, 0) the terms cancel heavily; the adaptive policy must still certify 1e-6.
  const auto& p = PlanePartitionTable::shared().get(400);
  const double x = -0.6;
  const EvalResult r = evaluate_adaptive(p, x);
  const double value = std::abs(r.value.to_complex());
  EXPECT_LT(value, 1e-6 * absolute_sum(p, BigFloat(0.6, 256)).to_double());
  EXPECT_LT(r.abs_error_bound, 1e-6 * value);
}

TEST(Evaluate, RecurrenceValuesMatchHorner) {
  const Complex x{-0.45, 0.3};
  const auto values = values_by_recurrence(x, 80, 256);
  for (unsigned n : {0u, 1u, 17u, 80u}) {
    const Complex h = evaluate(plane_partition_polynomial(n), x, 256).value.to_complex();
    EXPECT_LT(std::abs(values[n].to_complex() - h), 1e-12 * std::max(1.0, std::abs(h))) << n;
  }
}

TEST(Table, SharedRowsAreStable) {
  auto& table = PlanePartitionTable::shared();
  const PlanePartitionPolynomial* row = &table.get(5);
  table.get(150);
  EXPECT_EQ(row, &table.get(5));
  EXPECT_GE(table.size(), 151u);
}

TEST(Json, CoefficientsRoundTrip) {
  const auto p = plane_partition_polynomial(3);
  EXPECT_EQ(to_json(p).dump(), R"({"n":3,"coeffs":["0","3","2","1"]})");
  const auto big = plane_partition_polynomial(300);
  EXPECT_EQ(polynomial_from_json(Json::parse(to_json(big).dump())), big);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"n":2,"coeffs":["0","1"]})")), std::invalid_argument);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"n":1,"coeffs":["0","x"]})")), std::invalid_argument);
}

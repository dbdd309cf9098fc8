#pragma once

// Exact plane partition polynomials
//   Q_n(x) = sum_k pp_k(n) x^k,   prod_{m>=1} (1 - x u^m)^(-m) = sum_n Q_n(x) u^n,
// computed from the log-derivative recurrence
//   n Q_n(x) = sum_{j=1}^n a_j(x) Q_{n-j}(x),   a_j(x) = sum_{d | j} (j/d)^2 x^d.

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "multiprecision.hpp"

namespace plpoly {

struct WeightTerm {
  unsigned degree;
  unsigned long coefficient;
  friend bool operator==(const WeightTerm&, const WeightTerm&) = default;
};

/// Sparse a_j(x): one term (d, (j/d)^2) per divisor d of j, increasing in d.
inline std::vector<WeightTerm> log_derivative_weights(unsigned j) {
  if (j == 0) throw DomainError("log_derivative_weights: j must be positive");
  std::vector<WeightTerm> terms;
  for (unsigned d = 1; d <= j; ++d) {
    if (j % d != 0) continue;
    const unsigned long q = j / d;
    terms.push_back({d, q * q});
  }
  return terms;
}

/// Q_n as its exact coefficient vector c_0..c_n, c_k = pp_k(n).
struct PlanePartitionPolynomial {
  unsigned n = 0;
  std::vector<mpz_class> coeffs;

  unsigned degree() const { return n; }

  /// PL(n) = Q_n(1).
  mpz_class total() const {
    mpz_class s = 0;
    for (const auto& c : coeffs) s += c;
    return s;
  }

  std::vector<std::string> decimal_coeffs() const {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
  }

  friend bool operator==(const PlanePartitionPolynomial& a, const PlanePartitionPolynomial& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

/// Raised when the recurrence's division by n leaves a remainder.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Append-only table Q_0, Q_1, ... Rows never change once built, so references
/// returned by get() stay valid for the life of the table.
class PlanePartitionTable {
 public:
  PlanePartitionTable() {
    rows_.push_back({0, {mpz_class(1)}});
  }

  PlanePartitionTable(const PlanePartitionTable&) = delete;
  PlanePartitionTable& operator=(const PlanePartitionTable&) = delete;

  /// Process-wide table shared by the CLI and the test suites.
  static PlanePartitionTable& shared() {
    static PlanePartitionTable table;
    return table;
  }

  const PlanePartitionPolynomial& get(unsigned n) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= n) extend_one();
    return rows_[n];
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return rows_.size();
  }

 private:
  void extend_one() {
    const unsigned n = static_cast<unsigned>(rows_.size());
    weights_.push_back(log_derivative_weights(n));  // weights_[j-1] = a_j

    std::vector<mpz_class> acc(n + 1, mpz_class(0));
    for (unsigned j = 1; j <= n; ++j) {
      const auto& prev = rows_[n - j].coeffs;
      for (const WeightTerm& t : weights_[j - 1]) {
        for (std::size_t i = 0; i < prev.size(); ++i) {
          if (sgn(prev[i]) == 0) continue;
          mpz_addmul_ui(acc[i + t.degree].get_mpz_t(), prev[i].get_mpz_t(), t.coefficient);
        }
      }
    }
    for (auto& c : acc) {
      if (mpz_divisible_ui_p(c.get_mpz_t(), n) == 0)
        throw ConsistencyError("plane partition recurrence: inexact division by n = " +
                               std::to_string(n));
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n);
    }
    rows_.push_back({n, std::move(acc)});
  }

  mutable std::mutex mutex_;
  std::deque<PlanePartitionPolynomial> rows_;
  std::vector<std::vector<WeightTerm>> weights_;
};

inline PlanePartitionPolynomial plane_partition_polynomial(unsigned n) {
  return PlanePartitionTable::shared().get(n);
}

/// Brute-force oracle: enumerate every plane partition of n (rows weakly
/// decreasing, each row bounded entrywise by the row above) and tally traces.
inline PlanePartitionPolynomial enumerate_by_trace(unsigned n) {
  if (n < 1 || n > 12) throw DomainError("enumerate_by_trace: n must lie in [1, 12]");
  std::vector<unsigned long> tally(n + 1, 0);

  // Rows are stored as vectors of positive parts.
  std::vector<std::vector<unsigned>> rows;
  std::function<void(unsigned, unsigned)> next_row;
  std::vector<unsigned> row;

  // Fill row `rows.size()` entry by entry, then recurse into the following row.
  std::function<void(std::size_t, unsigned, unsigned)> fill = [&](std::size_t col, unsigned left,
                                                                  unsigned trace) {
    const std::size_t r = rows.size();
    if (!row.empty()) {
      // Close the row here and continue below it.
      rows.push_back(row);
      next_row(left, trace);
      rows.pop_back();
    }
    const std::vector<unsigned>* above = r == 0 ? nullptr : &rows[r - 1];
    if (above != nullptr && col >= above->size()) return;
    unsigned cap = left;
    if (col > 0) cap = std::min(cap, row[col - 1]);
    if (above != nullptr) cap = std::min(cap, (*above)[col]);
    for (unsigned v = 1; v <= cap; ++v) {
      row.push_back(v);
      fill(col + 1, left - v, trace + (col == r ? v : 0u));
      row.pop_back();
    }
  };

  next_row = [&](unsigned left, unsigned trace) {
    if (left == 0) {
      ++tally[trace];
      return;
    }
    std::vector<unsigned> saved;
    saved.swap(row);
    fill(0, left, trace);
    row.swap(saved);
  };

  next_row(n, 0);

  PlanePartitionPolynomial p{n, {}};
  p.coeffs.reserve(n + 1);
  for (auto c : tally) p.coeffs.emplace_back(c);
  return p;
}

/// Horner evaluation result with its rounding envelope.
struct EvalResult {
  BigComplex value;
  double abs_error_bound = 0.0;
  mpfr_prec_t precision_bits = 0;
};

/// Sum_k |c_k| |x|^k at the given precision.
inline BigFloat absolute_sum(const PlanePartitionPolynomial& p, const BigFloat& radius) {
  const mpfr_prec_t bits = radius.precision();
  BigFloat s(bits);
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    s *= radius;
    s += BigFloat(mpz_class(abs(p.coeffs[k])), bits);
  }
  return s;
}

/// Horner's rule at precision_bits on the exact coefficients.
/// The bound is (3n+2) 2^-bits sum_k |c_k| |x|^k.
inline EvalResult evaluate(const PlanePartitionPolynomial& p, const BigComplex& x) {
  const mpfr_prec_t bits = x.precision();
  if (bits < 64) throw DomainError("evaluate: precision_bits must be at least 64");
  BigComplex v(bits);
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    v *= x;
    v.real() += BigFloat(p.coeffs[k], bits);
  }
  BigFloat envelope = absolute_sum(p, x.abs());
  mpfr_mul_ui(envelope.get(), envelope.get(), 3ul * p.n + 2ul, MPFR_RNDU);
  mpfr_mul_2si(envelope.get(), envelope.get(), -static_cast<long>(bits), MPFR_RNDU);
  return {std::move(v), mpfr_get_d(envelope.get(), MPFR_RNDU), bits};
}

inline EvalResult evaluate(const PlanePartitionPolynomial& p, Complex x, mpfr_prec_t precision_bits) {
  if (precision_bits < 64) throw DomainError("evaluate: precision_bits must be at least 64");
  return evaluate(p, BigComplex(x, precision_bits));
}

/// Doubles the precision from start_bits until the bound falls under
/// rel_target * max(|value|, 1e-300).
inline EvalResult evaluate_adaptive(const PlanePartitionPolynomial& p, Complex x,
                                    mpfr_prec_t start_bits = 256, double rel_target = 1e-8,
                                    mpfr_prec_t max_bits = 1 << 16) {
  for (mpfr_prec_t bits = std::max<mpfr_prec_t>(start_bits, 64); bits <= max_bits; bits *= 2) {
    EvalResult r = evaluate(p, x, bits);
    const double magnitude = std::max(r.value.abs().to_double(), 1e-300);
    if (r.abs_error_bound < rel_target * magnitude) return r;
  }
  throw ConvergenceError("evaluate_adaptive: precision cap reached before the error target");
}

/// Q_0(x), ..., Q_N(x) from the value recurrence at a fixed point, O(N^2) work.
/// Used for n beyond the range where building exact coefficients is practical.
inline std::vector<BigComplex> values_by_recurrence(Complex x, unsigned max_n, mpfr_prec_t bits) {
  const BigComplex xb(x, bits);
  std::vector<BigComplex> powers;  // powers[d] = x^d
  powers.reserve(max_n + 1);
  powers.emplace_back(Complex{1.0, 0.0}, bits);
  for (unsigned d = 1; d <= max_n; ++d) powers.push_back(powers.back() * xb);

  std::vector<BigComplex> weights;  // weights[j] = a_j(x)
  weights.reserve(max_n + 1);
  weights.emplace_back(bits);
  for (unsigned j = 1; j <= max_n; ++j) {
    BigComplex a(bits);
    for (const WeightTerm& t : log_derivative_weights(j)) {
      BigComplex term = powers[t.degree];
      mpfr_mul_ui(term.real().get(), term.real().get(), t.coefficient, MPFR_RNDN);
      mpfr_mul_ui(term.imag().get(), term.imag().get(), t.coefficient, MPFR_RNDN);
      a += term;
    }
    weights.push_back(std::move(a));
  }

  std::vector<BigComplex> q;
  q.reserve(max_n + 1);
  q.emplace_back(Complex{1.0, 0.0}, bits);
  for (unsigned n = 1; n <= max_n; ++n) {
    BigComplex acc(bits);
    for (unsigned j = 1; j <= n; ++j) acc += weights[j] * q[n - j];
    mpfr_div_ui(acc.real().get(), acc.real().get(), n, MPFR_RNDN);
    mpfr_div_ui(acc.imag().get(), acc.imag().get(), n, MPFR_RNDN);
    q.push_back(std::move(acc));
  }
  return q;
}

}  // namespace plpoly

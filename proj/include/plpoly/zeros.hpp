#pragma once

// Zeros of Q_n from its exact coefficients, and the real zeros on (x*, 0)
// predicted by the cosine factor of the oscillatory main term.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "asymptotics.hpp"
#include "core.hpp"
#include "exact_polynomials.hpp"
#include "multiprecision.hpp"

namespace plpoly {

struct RootSet {
  unsigned n = 0;
  mpfr_prec_t precision_bits = 0;
  /// All n roots, the exact root 0 first.
  std::vector<Complex> roots;
  /// Same roots at the working precision.
  std::vector<BigComplex> precise;
  /// |Q_n(r)| / |Q_n'(r)|, the size of the Newton correction at each root.
  std::vector<double> residuals;
  /// |Q_n(r)| / sum_k |c_k| |r|^k.
  std::vector<double> backward_errors;
  std::vector<bool> converged;
  unsigned iterations = 0;

  bool all_converged() const { return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; }); }

  /// re,im,residual with 17 significant digits.
  void write_csv(std::ostream& os) const {
    const auto old = os.precision(17);
    os << "re,im,residual\n";
    for (std::size_t i = 0; i < roots.size(); ++i)
      os << roots[i].real() << ',' << roots[i].imag() << ',' << residuals[i] << '\n';
    os.precision(old);
  }
};

namespace detail {

/// Scratch registers for allocation-free complex arithmetic at one precision.
struct ComplexScratch {
  explicit ComplexScratch(mpfr_prec_t bits) : t1(bits), t2(bits), t3(bits) {}
  BigFloat t1, t2, t3;

  /// out = out * z (out must not alias z)
  void mul_assign(BigComplex& out, const BigComplex& z) {
    mpfr_mul(t1.get(), out.real().get(), z.real().get(), MPFR_RNDN);
    mpfr_mul(t2.get(), out.imag().get(), z.imag().get(), MPFR_RNDN);
    mpfr_mul(t3.get(), out.real().get(), z.imag().get(), MPFR_RNDN);
    mpfr_sub(out.real().get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), out.imag().get(), z.real().get(), MPFR_RNDN);
    mpfr_add(out.imag().get(), t3.get(), t1.get(), MPFR_RNDN);
  }
  /// out = 1 / z
  void reciprocal(BigComplex& out, const BigComplex& z) {
    mpfr_sqr(t1.get(), z.real().get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), z.imag().get(), MPFR_RNDN);
    mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(out.real().get(), z.real().get(), t1.get(), MPFR_RNDN);
    mpfr_div(out.imag().get(), z.imag().get(), t1.get(), MPFR_RNDN);
    mpfr_neg(out.imag().get(), out.imag().get(), MPFR_RNDN);
  }
};

/// Horner for p and p' at z; coefficients in increasing degree.
inline void horner_with_derivative(const std::vector<BigFloat>& coeffs, const BigComplex& z, BigComplex& p,
                                   BigComplex& dp, ComplexScratch& s) {
  mpfr_set(p.real().get(), coeffs.back().get(), MPFR_RNDN);
  mpfr_set_zero(p.imag().get(), 1);
  mpfr_set_zero(dp.real().get(), 1);
  mpfr_set_zero(dp.imag().get(), 1);
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    s.mul_assign(dp, z);
    dp += p;
    s.mul_assign(p, z);
    mpfr_add(p.real().get(), p.real().get(), coeffs[k].get(), MPFR_RNDN);
  }
}

}  // namespace detail

/// Q_n(r) and Q_n'(r) on the exact coefficients at the precision of r.
inline std::pair<BigComplex, BigComplex> evaluate_with_derivative(const PlanePartitionPolynomial& p,
                                                                  const BigComplex& r) {
  const mpfr_prec_t bits = r.precision();
  std::vector<BigFloat> coeffs;
  coeffs.reserve(p.coeffs.size());
  for (const auto& c : p.coeffs) coeffs.emplace_back(c, bits);
  BigComplex value(bits), derivative(bits);
  detail::ComplexScratch scratch(bits);
  detail::horner_with_derivative(coeffs, r, value, derivative, scratch);
  return {std::move(value), std::move(derivative)};
}

/// All zeros of Q_n: 0 exactly, the other n-1 by Aberth-Ehrlich iteration at
/// precision_bits on the coefficients scaled by their maximum.
inline RootSet roots(unsigned n, mpfr_prec_t precision_bits = 256, unsigned max_iterations = 2000) {
  if (n < 1 || n > 400) throw DomainError("roots: n must lie in [1, 400]");
  if (precision_bits < 64) throw DomainError("roots: precision_bits must be at least 64");
  const PlanePartitionPolynomial& q = PlanePartitionTable::shared().get(n);
  const mpfr_prec_t bits = precision_bits;

  RootSet out;
  out.n = n;
  out.precision_bits = bits;
  out.precise.emplace_back(bits);

  const std::size_t m = n - 1;  // degree after removing the factor x
  std::vector<bool> converged(m, false);
  if (m > 0) {
    mpz_class cmax = 0;
    for (const auto& c : q.coeffs) cmax = std::max(cmax, c);
    const BigFloat scale(cmax, bits);
    std::vector<BigFloat> reduced;  // c_1..c_n / cmax
    reduced.reserve(n);
    for (unsigned k = 1; k <= n; ++k) reduced.push_back(BigFloat(q.coeffs[k], bits) / scale);

    // Radius (c_1 / c_n)^{1/(n-1)} = geometric mean of the root moduli.
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, q.coeffs[1].get_mpz_t());
    const double log_c1 = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    const double radius = m == 1 ? 1.0 : std::exp(log_c1 / static_cast<double>(m));

    std::vector<BigComplex> z;
    z.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
      z.emplace_back(std::polar(radius, 2.0 * pi * static_cast<double>(j) / static_cast<double>(m) + 0.4), bits);

    BigFloat eps(1.0, bits);
    mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(bits / 2), MPFR_RNDN);

    detail::ComplexScratch scratch(bits);
    BigComplex p(bits), dp(bits), ratio(bits), sum(bits), diff(bits), inv(bits), step(bits);
    BigFloat step_size(bits);
    unsigned it = 0;
    for (; it < max_iterations; ++it) {
      bool all_small = true;
      for (std::size_t i = 0; i < m; ++i) {
        detail::horner_with_derivative(reduced, z[i], p, dp, scratch);
        if (p.real().is_zero() && p.imag().is_zero()) {
          converged[i] = true;
          continue;
        }
        // ratio = p / p'
        scratch.reciprocal(inv, dp);
        ratio = p;
        scratch.mul_assign(ratio, inv);
        // sum = sum_{j != i} 1 / (z_i - z_j)
        mpfr_set_zero(sum.real().get(), 1);
        mpfr_set_zero(sum.imag().get(), 1);
        for (std::size_t j = 0; j < m; ++j) {
          if (j == i) continue;
          mpfr_sub(diff.real().get(), z[i].real().get(), z[j].real().get(), MPFR_RNDN);
          mpfr_sub(diff.imag().get(), z[i].imag().get(), z[j].imag().get(), MPFR_RNDN);
          scratch.reciprocal(inv, diff);
          sum += inv;
        }
        // step = ratio / (1 - ratio * sum)
        diff = ratio;
        scratch.mul_assign(diff, sum);
        mpfr_ui_sub(diff.real().get(), 1, diff.real().get(), MPFR_RNDN);
        mpfr_neg(diff.imag().get(), diff.imag().get(), MPFR_RNDN);
        scratch.reciprocal(inv, diff);
        step = ratio;
        scratch.mul_assign(step, inv);
        z[i] -= step;

        mpfr_hypot(step_size.get(), step.real().get(), step.imag().get(), MPFR_RNDN);
        converged[i] = step_size < eps;
        if (!converged[i]) all_small = false;
      }
      if (all_small) {
        ++it;
        break;
      }
    }
    out.iterations = it;
    for (auto& r : z) out.precise.push_back(std::move(r));
  }

  out.converged.push_back(true);
  out.converged.insert(out.converged.end(), converged.begin(), converged.end());
  for (const BigComplex& r : out.precise) {
    out.roots.push_back(r.to_complex());
    if (r.real().is_zero() && r.imag().is_zero()) {
      out.residuals.push_back(0.0);
      out.backward_errors.push_back(0.0);
      continue;
    }
    const auto [value, derivative] = evaluate_with_derivative(q, r);
    const double dmag = derivative.abs().to_double();
    const BigFloat vabs = value.abs();
    out.residuals.push_back(dmag > 0.0 ? (vabs / derivative.abs()).to_double() : vabs.to_double());
    out.backward_errors.push_back((vabs / absolute_sum(q, r.abs())).to_double());
  }
  return out;
}

/// (-1)^{n-1} times the product of the nonzero roots, which must equal c_1 = pp_1(n).
inline BigComplex signed_root_product(const RootSet& set) {
  const mpfr_prec_t bits = set.precision_bits;
  BigComplex prod(Complex{1.0, 0.0}, bits);
  for (const BigComplex& r : set.precise) {
    if (r.real().is_zero() && r.imag().is_zero()) continue;
    prod *= r;
  }
  if ((set.n - 1) % 2 == 1) {
    prod.real() = -prod.real();
    prod.imag() = -prod.imag();
  }
  return prod;
}

/// Real x in (x*, 0) where (3 sqrt3/4) 2^{1/3} n^{2/3} |Li3(x)|^{1/3} + pi/6 = pi/2 + j pi,
/// j = 0, 1, ...; returned in order of j (the first is closest to 0).
inline std::vector<double> predicted_interval_zeros(unsigned n) {
  if (n < 1) throw DomainError("predicted_interval_zeros: requires n >= 1");
  const double xs = phase_constants().x_star;
  const double c = 0.75 * std::sqrt(3.0) * std::cbrt(2.0) * std::cbrt(static_cast<double>(n) * n);
  const double li_max = std::abs(trilog(xs, kPhaseTolerance).real());
  auto magnitude = [](double r) { return std::abs(trilog(-r, kPhaseTolerance).real()); };

  std::vector<double> out;
  for (unsigned j = 0;; ++j) {
    const double target = std::pow((pi / 3.0 + pi * j) / c, 3);
    if (!(target < li_max)) break;
    double lo = 0.0, hi = -xs;
    while (hi - lo > 1e-15) {
      const double mid = 0.5 * (lo + hi);
      (magnitude(mid) < target ? lo : hi) = mid;
    }
    out.push_back(-0.5 * (lo + hi));
  }
  return out;
}

struct ZeroMatchReport {
  std::vector<std::pair<double, double>> pairs;  // (actual, predicted)
  std::size_t actual_in_window = 0;
  std::size_t predicted_in_window = 0;
  double max_distance = 0.0;
  double mean_distance = 0.0;

  bool cardinality_mismatch() const { return actual_in_window != predicted_in_window; }
};

/// Greedy nearest pairing of the real roots of Q_n in (x* + margin, -margin)
/// with the predicted zeros in the same window.
inline ZeroMatchReport match_zeros(const RootSet& actual, const std::vector<double>& predicted,
                                   double margin = 1e-3, double imag_tol = 1e-12) {
  const double lo = phase_constants().x_star + margin, hi = -margin;
  auto inside = [&](double v) { return v > lo && v < hi; };

  std::vector<double> real_roots, window;
  for (const Complex& r : actual.roots)
    if (std::abs(r.imag()) <= imag_tol && inside(r.real())) real_roots.push_back(r.real());
  for (double p : predicted)
    if (inside(p)) window.push_back(p);

  ZeroMatchReport report;
  report.actual_in_window = real_roots.size();
  report.predicted_in_window = window.size();

  struct Candidate {
    double distance;
    std::size_t a, p;
  };
  std::vector<Candidate> candidates;
  for (std::size_t a = 0; a < real_roots.size(); ++a)
    for (std::size_t p = 0; p < window.size(); ++p)
      candidates.push_back({std::abs(real_roots[a] - window[p]), a, p});
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return x.distance < y.distance || (x.distance == y.distance && (x.a < y.a || (x.a == y.a && x.p < y.p)));
  });
  std::vector<bool> used_a(real_roots.size(), false), used_p(window.size(), false);
  double total = 0.0;
  for (const Candidate& c : candidates) {
    if (used_a[c.a] || used_p[c.p]) continue;
    used_a[c.a] = used_p[c.p] = true;
    report.pairs.emplace_back(real_roots[c.a], window[c.p]);
    report.max_distance = std::max(report.max_distance, c.distance);
    total += c.distance;
  }
  if (!report.pairs.empty()) report.mean_distance = total / static_cast<double>(report.pairs.size());
  std::sort(report.pairs.begin(), report.pairs.end());
  return report;
}

}  // namespace plpoly

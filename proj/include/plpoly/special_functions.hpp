#pragma once

// Complex trilogarithm on the closed unit disk and the phase functions
//   L_k(x) = (1/k) * (2 Li3(x^k))^(1/3).

#include <cmath>
#include <complex>

#include "core.hpp"

namespace plpoly {

/// Cube root with argument in (-pi/3, pi/3].
inline Complex principal_cuberoot(Complex z) {
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
  double arg = std::arg(z);
  // A negative real with a -0.0 imaginary part must land on the +pi/3 branch.
  if (z.imag() == 0.0 && z.real() < 0.0) arg = pi;
  return std::polar(std::cbrt(std::abs(z)), arg / 3.0);
}

/// Li3(x) = sum_{n>=1} x^n / n^3 for |x| <= 1, summed directly.
///
/// The loop stops once the certified tail bound
///   min(|x|^(N+1) / ((N+1)^3 (1-|x|)), 1 / (2 N^2))
/// drops below tol.abs_tol; otherwise TruncationError reports the bound reached.
inline Complex trilog(Complex x, const SeriesTolerance& tol = {}) {
  tol.validate();
  const double r = std::abs(x);
  if (!(r <= 1.0 + 1e-15))
    throw DomainError("trilog: |x| must not exceed 1");
  if (r == 0.0) return {0.0, 0.0};

  // Neumaier-compensated sum; terms decay monotonically in magnitude.
  Complex sum{0.0, 0.0}, comp{0.0, 0.0};
  auto add = [&](Complex term) {
    const Complex t = sum + term;
    const double cr = std::abs(sum.real()) >= std::abs(term.real())
                          ? (sum.real() - t.real()) + term.real()
                          : (term.real() - t.real()) + sum.real();
    const double ci = std::abs(sum.imag()) >= std::abs(term.imag())
                          ? (sum.imag() - t.imag()) + term.imag()
                          : (term.imag() - t.imag()) + sum.imag();
    comp += Complex{cr, ci};
    sum = t;
  };

  Complex power = x;
  double rpow_next = r * r;  // |x|^(N+1) after N terms
  double bound = 0.0;
  for (std::int64_t n = 1; n <= tol.max_terms; ++n) {
    const double nd = static_cast<double>(n);
    add(power / (nd * nd * nd));
    power *= x;

    const double np1 = nd + 1.0;
    const double pseries = 1.0 / (2.0 * nd * nd);
    bound = pseries;
    if (r < 1.0) bound = std::min(bound, rpow_next / (np1 * np1 * np1 * (1.0 - r)));
    if (bound <= tol.abs_tol) return sum + comp;
    rpow_next *= r;
  }
  throw TruncationError("trilog: tolerance unreachable", bound, tol.max_terms);
}

/// L_k(x) = (1/k) (2 Li3(x^k))^(1/3), principal cube root.
inline Complex phase_function(unsigned k, Complex x, const SeriesTolerance& tol = {}) {
  if (k == 0) throw DomainError("L_k: k must be positive");
  const Complex li = trilog(ipow(x, k), tol);
  return principal_cuberoot(2.0 * li) / static_cast<double>(k);
}

}  // namespace plpoly

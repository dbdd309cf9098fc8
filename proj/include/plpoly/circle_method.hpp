#pragma once

// Circle-method decomposition of the generating function near u = e^{2 pi i h/k}.
//
// With u = e^{-w + 2 pi i h/k}, Re w > 0:
//   ln P(x,u) = A_{h,k}(x,w) + B_{h,k}(x,w)
//   P(x,u)    = omega_{h,k,n}(x) e^{2 pi i n h/k} e^{Psi_{h,k}(x,w)} e^{g_{h,k}(x,w)}
// where Psi = Li3(x^k) / (k^3 w^2) and
//   ln omega = Ln(1 - x^k)/(12k) + A_{h,k}(x,0) - 2 pi i n h/k   (k >= 2)
//            = Ln(1 - x)/12                                     (k = 1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "core.hpp"
#include "special_functions.hpp"

namespace plpoly {

struct Fraction {
  long num = 0;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
};

inline Fraction mediant(const Fraction& a, const Fraction& b) { return {a.num + b.num, a.den + b.den}; }

/// One member h/k of F_N together with its neighbours and the mediant-bounded arc
/// [h/k - 1/(k(k+k')), h/k + 1/(k(k+k''))]. Neighbours wrap around the unit
/// interval: the left neighbour of 0/1 is (N-1)/N - 1 and the right neighbour of
/// (N-1)/N is 1/1.
struct FareyArc {
  long h = 0;
  long k = 1;
  Fraction left;
  Fraction right;

  Fraction center() const { return {h, k}; }
  Fraction lower() const { return mediant(left, center()); }
  Fraction upper() const { return mediant(center(), right); }
  /// Arc offsets relative to h/k: [-1/(k(k+k')), 1/(k(k+k''))].
  double offset_lower() const { return -1.0 / static_cast<double>(k * (k + left.den)); }
  double offset_upper() const { return 1.0 / static_cast<double>(k * (k + right.den)); }
};

/// F_N restricted to [0, 1): all reduced h/k with k <= N in increasing order.
inline std::vector<FareyArc> farey(long order) {
  if (order < 1) throw DomainError("farey: order must be positive");
  std::vector<Fraction> seq;
  long a = 0, b = 1, c = 1, d = order;
  seq.push_back({a, b});
  while (c < d) {
    seq.push_back({c, d});
    const long m = (order + b) / d;
    const long nc = m * c - a;
    const long nd = m * d - b;
    a = c;
    b = d;
    c = nc;
    d = nd;
  }
  std::vector<FareyArc> arcs;
  arcs.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Fraction left = i == 0 ? Fraction{seq.back().num - seq.back().den, seq.back().den} : seq[i - 1];
    const Fraction right = i + 1 == seq.size() ? Fraction{1, 1} : seq[i + 1];
    arcs.push_back({seq[i].num, seq[i].den, left, right});
  }
  return arcs;
}

namespace detail {

inline void require_open_disk(Complex x, const char* who) {
  if (!(std::abs(x) < 1.0)) throw DomainError(std::string(who) + ": requires |x| < 1");
}

/// e^{2 pi i r / k} for integer r, reduced mod k first.
inline Complex root_of_unity(long r, long k) {
  const long m = ((r % k) + k) % k;
  return std::polar(1.0, 2.0 * pi * static_cast<double>(m) / static_cast<double>(k));
}

/// q / (1 - q)^2.
inline Complex pole_kernel(Complex q) {
  const Complex d = 1.0 - q;
  return q / (d * d);
}

/// e^{-t} / (1 - e^{-t})^2 for real t > 0, decreasing in t.
inline double kernel_envelope(double t) {
  const double e = std::exp(-t);
  const double d = -std::expm1(-t);
  return e / (d * d);
}

/// h(z) = e^{-z}/(1-e^{-z})^2 - 1/z^2 + 1/12, analytic in |z| < 2 pi with h(0) = 0.
inline Complex kernel_remainder(Complex z) {
  if (std::abs(z) < 1.0) {
    // -(2n-1) B_{2n} / (2n)! for n = 2..10
    static constexpr std::array<double, 9> c = {
        1.0 / 240.0,
        -1.0 / 6048.0,
        1.0 / 172800.0,
        -1.0 / 5322240.0,
        5.812609152556243e-09,
        -1.7397297489890083e-10,
        5.084520444483875e-12,
        -1.4596305495672335e-13,
        4.1322505272603176e-15,
    };
    const Complex z2 = z * z;
    Complex acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z2 + c[i];
    return acc * z2;
  }
  const Complex s = std::sinh(0.5 * z);
  return 1.0 / (4.0 * s * s) - 1.0 / (z * z) + 1.0 / 12.0;
}

/// Geometric tail sum_{l > L} r^l / l <= r^(L+1) / ((L+1)(1-r)).
inline double log_series_tail(double r, std::int64_t last) {
  const double lp1 = static_cast<double>(last + 1);
  return std::pow(r, lp1) / (lp1 * (1.0 - r));
}

}  // namespace detail

/// ln P(x,u) = sum_l (x^l / l) u^l / (1 - u^l)^2 for |x| < 1, |u| < 1.
inline Complex log_gen_fn(Complex x, Complex u, const SeriesTolerance& tol = {}) {
  tol.validate();
  if (!(std::abs(x) <= 1.0) || !(std::abs(u) < 1.0))
    throw DomainError("log_gen_fn: requires |x| <= 1 and |u| < 1");
  if (x == Complex{0.0, 0.0} || u == Complex{0.0, 0.0}) return {0.0, 0.0};
  const double ru = std::abs(u), rxu = std::abs(x) * ru;
  Complex sum{0.0, 0.0}, xp{1.0, 0.0}, up{1.0, 0.0};
  double bound = 0.0;
  for (std::int64_t l = 1; l <= tol.max_terms; ++l) {
    xp *= x;
    up *= u;
    sum += xp / static_cast<double>(l) * detail::pole_kernel(up);
    const double next = std::pow(ru, static_cast<double>(l + 1));
    bound = detail::log_series_tail(rxu, l) / ((1.0 - next) * (1.0 - next));
    if (bound <= tol.abs_tol) return sum;
  }
  throw TruncationError("log_gen_fn: tolerance unreachable", bound, tol.max_terms);
}

/// A_{h,k}(x,w) = sum_{k !| l} (x^l / l) q^l / (1 - q^l)^2, q = e^{-w + 2 pi i h/k}.
/// At w = 0 each kernel is -csc^2(pi l h / k) / 4. Zero for k = 1.
inline Complex A_series(long h, long k, Complex x, Complex w, const SeriesTolerance& tol = {}) {
  tol.validate();
  if (k < 1) throw DomainError("A_series: k must be positive");
  if (k == 1) return {0.0, 0.0};
  detail::require_open_disk(x, "A_series");
  const bool at_zero = w == Complex{0.0, 0.0};
  if (!at_zero && !(w.real() > 0.0)) throw DomainError("A_series: requires Re w > 0 or w = 0");
  if (x == Complex{0.0, 0.0}) return {0.0, 0.0};

  const double r = std::abs(x);
  const double kk = static_cast<double>(k);
  Complex sum{0.0, 0.0}, xp{1.0, 0.0};
  double bound = 0.0;
  for (std::int64_t l = 1; l <= tol.max_terms; ++l) {
    xp *= x;
    if (l % k != 0) {
      Complex kernel;
      if (at_zero) {
        const double s = std::sin(pi * static_cast<double>(((l * h) % k + k) % k) / kk);
        kernel = -0.25 / (s * s);
      } else {
        kernel = detail::pole_kernel(std::exp(-static_cast<double>(l) * w) * detail::root_of_unity(l * h, k));
      }
      sum += xp / static_cast<double>(l) * kernel;
    }
    double envelope = kk * kk / 4.0;
    if (!at_zero) {
      const double d = -std::expm1(-static_cast<double>(l + 1) * w.real());
      envelope = 1.0 / (d * d);
    }
    bound = detail::log_series_tail(r, l) * envelope;
    if (bound <= tol.abs_tol) return sum;
  }
  throw TruncationError("A_series: tolerance unreachable", bound, tol.max_terms);
}

/// B_{h,k}(x,w) = sum_l (x^{kl} / (kl)) e^{-lkw} / (1 - e^{-lkw})^2 (independent of h).
inline Complex B_series(long k, Complex x, Complex w, const SeriesTolerance& tol = {}) {
  tol.validate();
  if (k < 1) throw DomainError("B_series: k must be positive");
  detail::require_open_disk(x, "B_series");
  if (!(w.real() > 0.0)) throw DomainError("B_series: requires Re w > 0");
  if (x == Complex{0.0, 0.0}) return {0.0, 0.0};

  const Complex xk = ipow(x, static_cast<unsigned>(k));
  const double rk = std::abs(xk);
  const double kk = static_cast<double>(k);
  Complex sum{0.0, 0.0}, xp{1.0, 0.0};
  double bound = 0.0;
  for (std::int64_t l = 1; l <= tol.max_terms; ++l) {
    const double kl = kk * static_cast<double>(l);
    xp *= xk;
    sum += xp / kl * detail::pole_kernel(std::exp(-kl * w));
    bound = detail::log_series_tail(rk, l) / kk *
            detail::kernel_envelope(kk * static_cast<double>(l + 1) * w.real());
    if (bound <= tol.abs_tol) return sum;
  }
  throw TruncationError("B_series: tolerance unreachable", bound, tol.max_terms);
}

/// Psi_{h,k}(x,w) = Li3(x^k) / (k^3 w^2).
inline Complex psi(long k, Complex x, Complex w, const SeriesTolerance& tol = {}) {
  if (k < 1) throw DomainError("psi: k must be positive");
  if (w == Complex{0.0, 0.0}) throw DomainError("psi: w must be nonzero");
  const double kk = static_cast<double>(k);
  return trilog(ipow(x, static_cast<unsigned>(k)), tol) / (kk * kk * kk * w * w);
}

/// ln omega_{h,k,n}(x), principal logarithm of 1 - x^k.
inline Complex log_omega(long h, long k, long n, Complex x, const SeriesTolerance& tol = {}) {
  if (k < 1) throw DomainError("omega: k must be positive");
  detail::require_open_disk(x, "omega");
  if (std::gcd(h, k) != 1) throw DomainError("omega: requires gcd(h, k) = 1");
  if (k == 1) return std::log(1.0 - x) / 12.0;
  const double kk = static_cast<double>(k);
  const long phase = ((n % k) * (h % k) % k + k) % k;
  return std::log(1.0 - ipow(x, static_cast<unsigned>(k))) / (12.0 * kk) + A_series(h, k, x, 0.0, tol) -
         Complex{0.0, 2.0 * pi * static_cast<double>(phase) / kk};
}

inline Complex omega(long h, long k, long n, Complex x, const SeriesTolerance& tol = {}) {
  return std::exp(log_omega(h, k, n, x, tol));
}

/// [A(x,w) - A(x,0)] summed termwise.
inline Complex A_difference(long h, long k, Complex x, Complex w, const SeriesTolerance& tol = {}) {
  tol.validate();
  if (k == 1) return {0.0, 0.0};
  detail::require_open_disk(x, "A_difference");
  if (!(w.real() > 0.0)) throw DomainError("A_difference: requires Re w > 0");
  if (x == Complex{0.0, 0.0}) return {0.0, 0.0};
  const double r = std::abs(x);
  const double kk = static_cast<double>(k);
  Complex sum{0.0, 0.0}, xp{1.0, 0.0};
  double bound = 0.0;
  for (std::int64_t l = 1; l <= tol.max_terms; ++l) {
    xp *= x;
    if (l % k != 0) {
      const double s = std::sin(pi * static_cast<double>(((l * h) % k + k) % k) / kk);
      const Complex q = std::exp(-static_cast<double>(l) * w) * detail::root_of_unity(l * h, k);
      sum += xp / static_cast<double>(l) * (detail::pole_kernel(q) + 0.25 / (s * s));
    }
    const double d = -std::expm1(-static_cast<double>(l + 1) * w.real());
    bound = detail::log_series_tail(r, l) * (1.0 / (d * d) + kk * kk / 4.0);
    if (bound <= tol.abs_tol) return sum;
  }
  throw TruncationError("A_difference: tolerance unreachable", bound, tol.max_terms);
}

/// B - Psi - Ln(1 - x^k)/(12k) as the single series
///   sum_l (x^{kl}/(kl)) h(klw),  h(z) = e^{-z}/(1-e^{-z})^2 - 1/z^2 + 1/12.
inline Complex B_remainder(long k, Complex x, Complex w, const SeriesTolerance& tol = {}) {
  tol.validate();
  if (k < 1) throw DomainError("B_remainder: k must be positive");
  detail::require_open_disk(x, "B_remainder");
  if (!(w.real() > 0.0)) throw DomainError("B_remainder: requires Re w > 0");
  if (x == Complex{0.0, 0.0}) return {0.0, 0.0};
  const Complex xk = ipow(x, static_cast<unsigned>(k));
  const double rk = std::abs(xk);
  const double kk = static_cast<double>(k);
  const double aw = std::abs(w);
  Complex sum{0.0, 0.0}, xp{1.0, 0.0};
  double bound = 0.0;
  for (std::int64_t l = 1; l <= tol.max_terms; ++l) {
    const double kl = kk * static_cast<double>(l);
    xp *= xk;
    sum += xp / kl * detail::kernel_remainder(kl * w);
    const double next = kk * static_cast<double>(l + 1);
    const double envelope = detail::kernel_envelope(next * w.real()) + 1.0 / (next * next * aw * aw) + 1.0 / 12.0;
    bound = detail::log_series_tail(rk, l) / kk * envelope;
    if (bound <= tol.abs_tol) return sum;
  }
  throw TruncationError("B_remainder: tolerance unreachable", bound, tol.max_terms);
}

/// g_{h,k}(x,w) = [A(x,w) - A(x,0)] + [B(x,w) - Psi(x,w) - Ln(1-x^k)/(12k)].
inline Complex g(long h, long k, Complex x, Complex w, const SeriesTolerance& tol = {}) {
  SeriesTolerance half = tol;
  half.abs_tol = tol.abs_tol / 2.0;
  return A_difference(h, k, x, w, half) + B_remainder(k, x, w, half);
}

/// Bundle of the factorization pieces for one arc at w = 0 and a given w.
struct FactorizationParts {
  Complex A0;
  Complex psi;
  Complex log_omega;
  Complex g;
};

inline FactorizationParts factorization_parts(long h, long k, long n, Complex x, Complex w,
                                              const SeriesTolerance& tol = {}) {
  return {A_series(h, k, x, 0.0, tol), psi(k, x, w, tol), log_omega(h, k, n, x, tol), g(h, k, x, w, tol)};
}

/// |ln P(x, e^{-w + 2 pi i h/k}) - (ln omega + 2 pi i n h/k + Psi + g)| with the
/// imaginary part reduced mod 2 pi.
inline double factorization_residual(long h, long k, long n, Complex x, Complex w,
                                     const SeriesTolerance& tol = {}) {
  if (!(w.real() > 0.0)) throw DomainError("factorization_residual: requires Re w > 0");
  detail::require_open_disk(x, "factorization_residual");
  const Complex u = std::exp(-w) * detail::root_of_unity(h, k);
  const Complex lhs = log_gen_fn(x, u, tol);
  const long phase = ((n % k) * (h % k) % k + k) % k;
  const FactorizationParts parts = factorization_parts(h, k, n, x, w, tol);
  const Complex rhs = parts.log_omega +
                      Complex{0.0, 2.0 * pi * static_cast<double>(phase) / static_cast<double>(k)} +
                      parts.psi + parts.g;
  Complex diff = lhs - rhs;
  const double turns = std::round(diff.imag() / (2.0 * pi));
  diff.imag(diff.imag() - 2.0 * pi * turns);
  return std::abs(diff);
}

// ---------------------------------------------------------------------------
// Bounds, evaluated as checkable margins.

/// 1.05 * max over |z| <= pi of |h(z)| / |z|^2 on a 100 x 100 polar grid.
inline double calibrated_M() {
  static const double value = [] {
    double best = 1.0 / 240.0;
    for (int i = 1; i <= 100; ++i) {
      const double radius = pi * i / 100.0;
      for (int j = 0; j < 100; ++j) {
        const Complex z = std::polar(radius, 2.0 * pi * j / 100.0);
        best = std::max(best, std::abs(detail::kernel_remainder(z)) / (radius * radius));
      }
    }
    return 1.05 * best;
  }();
  return value;
}

/// Bound on |A(x,w) - A(x,0)|; the real-w form drops the second bracket term.
inline double A_difference_bound(long k, Complex x, Complex w) {
  const double r = std::abs(x), aw = std::abs(w);
  const double kk = static_cast<double>(k);
  double bracket = kk * kk * kk;
  if (w.imag() != 0.0) {
    const double t = pi / (kk * std::abs(w.imag()));
    bracket += std::pow(r, t) / (-std::expm1(-t * w.real()));
  }
  return 2.0 * aw / (1.0 - r) * bracket;
}

/// Bound on |B - Psi - Ln(1-x^k)/(12k)| with the supplied constant M.
inline double B_remainder_bound(long k, Complex x, Complex w, double M) {
  const double r = std::abs(x), aw = std::abs(w);
  const double tail = 2.0 / std::pow(-std::expm1(-w.real() * pi / aw), 3) + 1.0;
  return (M * aw * aw * static_cast<double>(k) + tail * std::pow(r, pi / aw)) / ((1.0 - r) * (1.0 - r));
}

/// Right-hand side of the bound on |g_{h,k}(x,w)|; part (b) when w is real.
inline double g_bound(long k, Complex x, Complex w, double M) {
  const double r = std::abs(x), aw = std::abs(w);
  const double tail = 2.0 / std::pow(-std::expm1(-w.real() * pi / aw), 3) + 1.0;
  const double b_part = (M * aw * aw * static_cast<double>(k) + tail * std::pow(r, pi / aw)) / (1.0 - r * r);
  return A_difference_bound(k, x, w) + b_part;
}

/// g_bound - |g|; nonnegative when the bound holds at this point.
inline double g_bound_margin(long h, long k, Complex x, Complex w, double M, const SeriesTolerance& tol = {}) {
  const double r = std::abs(x);
  if (!(r > 0.0 && r < 1.0) || !(w.real() > 0.0))
    throw DomainError("g_bound_margin: requires 0 < |x| < 1 and Re w > 0");
  return g_bound(k, x, w, M) - std::abs(g(h, k, x, w, tol));
}

/// 2^{1/12} exp((k^2/16)(zeta(3) - ln(1 - |x|))), a bound on |omega_{h,k,n}(x)|.
inline double omega_bound(long k, double radius) {
  const double kk = static_cast<double>(k);
  return std::pow(2.0, 1.0 / 12.0) * std::exp(kk * kk / 16.0 * (zeta3 - std::log1p(-radius)));
}

}  // namespace plpoly

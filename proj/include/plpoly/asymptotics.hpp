#pragma once

// Main terms of Q_n(x) on the phases, on (x*, 0) and on the phase boundary;
// the major-arc saddle integral and its closed form; and two independent
// routes to Q_n(x) through the Cauchy integral (trapezoid on the full circle,
// and the sum of per-arc integrals over a Farey dissection).

#include <cmath>
#include <string>
#include <vector>

#include "circle_method.hpp"
#include "core.hpp"
#include "phase_geometry.hpp"
#include "quadrature.hpp"
#include "special_functions.hpp"

namespace plpoly {

struct PhaseConstants {
  double x_star;
  double theta_star;
};

/// x* and theta*, computed once per process.
inline const PhaseConstants& phase_constants() {
  static const PhaseConstants constants{real_crossing(1e-12), circle_crossing(1e-10)};
  return constants;
}

inline bool on_oscillatory_interval(Complex x, bool closed = true) {
  if (x.imag() != 0.0) return false;
  const double xs = phase_constants().x_star;
  return closed ? (x.real() >= xs && x.real() <= 0.0) : (x.real() > xs && x.real() < 0.0);
}

struct AsymptoticEstimate {
  Complex value;
  Complex prefactor;
  /// (3/2) n^{2/3} L_m(x) of the leading term.
  Complex exponent;
  int phase = 1;
  std::string error_class = "O(n^-1/3)";
};

namespace detail {

inline double n_two_thirds(unsigned n) { return std::cbrt(static_cast<double>(n) * n); }

inline void require_punctured_disk(Complex x, unsigned n, const char* who) {
  const double r = std::abs(x);
  if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(who) + ": requires 0 < |x| < 1");
  if (n < 1) throw DomainError(std::string(who) + ": requires n >= 1");
}

inline AsymptoticEstimate r1_term(Complex x, unsigned n) {
  const Complex l1 = phase_function(1, x, kPhaseTolerance);
  const double n43 = n_two_thirds(n) * n_two_thirds(n);
  const Complex prefactor = std::pow(1.0 - x, 1.0 / 12.0) * std::sqrt(l1 / (6.0 * pi * n43));
  const Complex exponent = 1.5 * n_two_thirds(n) * l1;
  return {prefactor * std::exp(exponent), prefactor, exponent, 1};
}

inline AsymptoticEstimate r2_term(Complex x, unsigned n) {
  const Complex l2 = phase_function(2, x, kPhaseTolerance);
  const double n43 = n_two_thirds(n) * n_two_thirds(n);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  const Complex prefactor = sign * std::pow(1.0 - x * x, 1.0 / 24.0) *
                            std::pow((1.0 - x) / (1.0 + x), 1.0 / 8.0) * std::sqrt(l2 / (6.0 * pi * n43));
  const Complex exponent = 1.5 * n_two_thirds(n) * l2;
  return {prefactor * std::exp(exponent), prefactor, exponent, 2};
}

}  // namespace detail

/// (1-x)^{1/12} sqrt(L_1/(6 pi n^{4/3})) exp((3/2) n^{2/3} L_1), for x in R(1) off [x*, 0].
inline AsymptoticEstimate estimate_R1(Complex x, unsigned n) {
  detail::require_punctured_disk(x, n, "estimate_R1");
  if (on_oscillatory_interval(x))
    throw RegionError("estimate_R1: x lies on [x*, 0]", "osc");
  const PhaseLabel label = classify(x);
  if (label == PhaseLabel::R2) throw RegionError("estimate_R1: x lies in R(2)", "r2");
  if (label == PhaseLabel::Boundary) throw RegionError("estimate_R1: x lies on the phase boundary", "boundary");
  return detail::r1_term(x, n);
}

/// (-1)^n (1-x^2)^{1/24} ((1-x)/(1+x))^{1/8} sqrt(L_2/(6 pi n^{4/3})) exp((3/2) n^{2/3} L_2), x in R(2).
inline AsymptoticEstimate estimate_R2(Complex x, unsigned n) {
  detail::require_punctured_disk(x, n, "estimate_R2");
  const PhaseLabel label = classify(x);
  if (label == PhaseLabel::R1)
    throw RegionError("estimate_R2: x lies in R(1)", on_oscillatory_interval(x) ? "osc" : "r1");
  if (label == PhaseLabel::Boundary) throw RegionError("estimate_R2: x lies on the phase boundary", "boundary");
  return detail::r2_term(x, n);
}

/// Real main term on (x*, 0):
///   2^{7/6} (1-x)^{1/12} |Li3(x)|^{1/6} / sqrt(6 pi n^{4/3})
///     * exp((3/4) 2^{1/3} n^{2/3} |Li3|^{1/3}) cos((3 sqrt3/4) 2^{1/3} n^{2/3} |Li3|^{1/3} + pi/6).
inline double estimate_oscillatory(double x, unsigned n) {
  if (n < 1) throw DomainError("estimate_oscillatory: requires n >= 1");
  if (!on_oscillatory_interval(Complex{x, 0.0}, false))
    throw RegionError("estimate_oscillatory: x must lie in (x*, 0)", x > 0.0 ? "r1" : "r2");
  const double li = std::abs(trilog(x, kPhaseTolerance).real());
  const double n23 = detail::n_two_thirds(n);
  const double c = std::cbrt(2.0) * n23 * std::cbrt(li);
  const double amplitude = std::pow(2.0, 7.0 / 6.0) * std::pow(1.0 - x, 1.0 / 12.0) * std::pow(li, 1.0 / 6.0) /
                           std::sqrt(6.0 * pi * n23 * n23);
  return amplitude * std::exp(0.75 * c) * std::cos(0.75 * std::sqrt(3.0) * c + pi / 6.0);
}

/// Oscillation phase (3 sqrt3/4) 2^{1/3} n^{2/3} |Li3(x)|^{1/3} + pi/6 of the (x*, 0) main term.
inline double oscillatory_phase(double x, unsigned n) {
  const double li = std::abs(trilog(x, kPhaseTolerance).real());
  return 0.75 * std::sqrt(3.0) * std::cbrt(2.0) * detail::n_two_thirds(n) * std::cbrt(li) + pi / 6.0;
}

/// Sum of the R(1) and R(2) main terms; for x on the boundary Re L_1 = Re L_2.
inline AsymptoticEstimate estimate_boundary(Complex x, unsigned n) {
  detail::require_punctured_disk(x, n, "estimate_boundary");
  const AsymptoticEstimate a = detail::r1_term(x, n);
  const AsymptoticEstimate b = detail::r2_term(x, n);
  AsymptoticEstimate out = a;
  out.value = a.value + b.value;
  out.prefactor = a.prefactor + b.prefactor * std::exp(b.exponent - a.exponent);
  out.phase = 0;
  return out;
}

/// Individual terms, exposed for diagnostics.
inline AsymptoticEstimate r1_main_term(Complex x, unsigned n) { return detail::r1_term(x, n); }
inline AsymptoticEstimate r2_main_term(Complex x, unsigned n) { return detail::r2_term(x, n); }

// ---------------------------------------------------------------------------
// Saddle-point integral of the major arc.

/// Upper limit pi / (2 zeta(3))^{1/3} for the half-width parameter delta.
inline double max_delta() { return pi / std::cbrt(2.0 * zeta3); }
inline double default_delta() { return 0.5 * max_delta(); }

/// B(z) = L_m^3 / (2 (Re L_m - i z)^2) + (Re L_m - i z).
inline Complex saddle_exponent(Complex lm, double z) {
  const Complex s{lm.real(), -z};
  return lm * lm * lm / (2.0 * s * s) + s;
}

/// (1 / (2 pi n^{1/3})) int_{-pi/(m delta)}^{pi/(m delta)} exp(n^{2/3} B(z)) dz by adaptive quadrature.
inline Complex saddle_numeric(unsigned m, unsigned n, Complex x, double delta, const QuadratureTolerance& tol = {}) {
  if (m != 1 && m != 2) throw DomainError("saddle_numeric: m must be 1 or 2");
  if (!(delta > 0.0 && delta < max_delta())) throw DomainError("saddle_numeric: delta out of range");
  detail::require_punctured_disk(x, n, "saddle_numeric");
  const Complex lm = phase_function(m, x, kPhaseTolerance);
  const double n23 = detail::n_two_thirds(n);
  const double peak = 1.5 * lm.real();
  const double half = pi / (m * delta);
  auto integrand = [&](double z) { return std::exp(n23 * (saddle_exponent(lm, z) - peak)); };
  const Complex integral = integrate(integrand, -half, half, tol).value;
  return integral * std::exp(n23 * peak) / (2.0 * pi * std::cbrt(static_cast<double>(n)));
}

/// Saddle-point form (2 pi n^{4/3})^{-1/2} sqrt(L_m/3) exp((3/2) n^{2/3} L_m), plus its
/// conjugate when x^m is a negative real. The n^{4/3} carries the 1/(2 pi n^{1/3})
/// normalisation of saddle_numeric, so that omega_{1,m,n} times this term is the
/// main term of estimate_R1 / estimate_R2.
inline Complex saddle_closed(unsigned m, unsigned n, Complex x) {
  if (m != 1 && m != 2) throw DomainError("saddle_closed: m must be 1 or 2");
  detail::require_punctured_disk(x, n, "saddle_closed");
  const Complex lm = phase_function(m, x, kPhaseTolerance);
  const double n23 = detail::n_two_thirds(n);
  const Complex term = std::sqrt(lm / 3.0) * std::exp(1.5 * n23 * lm) / std::sqrt(2.0 * pi * n23 * n23);
  const Complex xm = ipow(x, m);
  if (xm.imag() == 0.0 && xm.real() < 0.0) return term + std::conj(term);
  return term;
}

/// Location of the maximum of Re B(z) on [-half, half]: grid scan then golden-section refinement.
inline double saddle_peak(Complex lm, double half, std::size_t grid = 4001, bool positive_side = false) {
  const double lo0 = positive_side ? 0.0 : -half;
  double best_z = lo0, best = -std::numeric_limits<double>::infinity();
  const double step = (half - lo0) / static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    const double z = lo0 + step * static_cast<double>(i);
    const double v = saddle_exponent(lm, z).real();
    if (v > best) {
      best = v;
      best_z = z;
    }
  }
  double a = std::max(lo0, best_z - step), b = std::min(half, best_z + step);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
    const double c = b - phi * (b - a), d = a + phi * (b - a);
    if (saddle_exponent(lm, c).real() > saddle_exponent(lm, d).real())
      b = d;
    else
      a = c;
  }
  return 0.5 * (a + b);
}

// ---------------------------------------------------------------------------
// Cauchy-integral routes to Q_n(x).

/// alpha = Re L_m(x) / (2 pi n^{1/3}).
inline double contour_alpha(Complex x, unsigned n, unsigned m) {
  return re_L(m, x) / (2.0 * pi * std::cbrt(static_cast<double>(std::max(n, 1u))));
}

/// Index of the dominant phase for choosing the contour: 2 in R(2), otherwise 1.
inline unsigned dominant_index(Complex x) {
  const double r = std::abs(x);
  if (!(r > 0.0 && r < 1.0)) return 1;
  return phase_difference(x) < 0.0 ? 2 : 1;
}

/// Trapezoid rule with M points on |u| = e^{-2 pi alpha}:
///   (1/M) sum_j P(x, r e^{2 pi i j/M}) r^{-n} e^{-2 pi i j n/M}.
inline Complex cauchy_reference(Complex x, unsigned n, double alpha, std::size_t points,
                                const SeriesTolerance& tol = {}) {
  if (!(std::abs(x) < 1.0)) throw DomainError("cauchy_reference: requires |x| < 1");
  if (!(alpha > 0.0)) throw DomainError("cauchy_reference: requires alpha > 0");
  if (points < 4ul * n || points == 0) throw DomainError("cauchy_reference: requires M_points >= 4n");
  const double radius = std::exp(-2.0 * pi * alpha);
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < points; ++j) {
    const double turn = static_cast<double>(j) / static_cast<double>(points);
    const Complex u = std::polar(radius, 2.0 * pi * turn);
    const double back = std::fmod(static_cast<double>((j * n) % points) / static_cast<double>(points), 1.0);
    sum += std::exp(log_gen_fn(x, u, tol)) * std::polar(1.0, -2.0 * pi * back);
  }
  return sum / static_cast<double>(points) * std::pow(radius, -static_cast<double>(n));
}

/// omega_{h,k,n}(x) I_{h,k,n}(x): the contribution of one Farey arc,
///   I = int_arc exp(Psi_{h,k}(x, w) + 2 pi n (alpha - i v) + g_{h,k}(x, w)) dv,  w = 2 pi (alpha - i v).
inline Complex arc_contribution(const FareyArc& arc, unsigned n, Complex x, double alpha,
                                const QuadratureTolerance& qtol = {}, const SeriesTolerance& stol = {}) {
  const double top = std::max(re_L(1, x), re_L(2, x));
  const double log_scale = 2.0 * pi * n * alpha + std::pow(top, 3) / (8.0 * pi * pi * alpha * alpha);
  auto integrand = [&](double v) {
    const Complex w{2.0 * pi * alpha, -2.0 * pi * v};
    const Complex e = psi(arc.k, x, w, stol) + 2.0 * pi * static_cast<double>(n) * Complex{alpha, -v} +
                      g(arc.h, arc.k, x, w, stol);
    return std::exp(e - log_scale);
  };
  const Complex integral = integrate(integrand, arc.offset_lower(), arc.offset_upper(), qtol).value;
  return omega(arc.h, arc.k, n, x, stol) * integral * std::exp(log_scale);
}

/// Per-arc contributions over F_N, in Farey order.
inline std::vector<Complex> arc_contributions(unsigned n, Complex x, long order, double alpha,
                                              const QuadratureTolerance& qtol = {},
                                              const SeriesTolerance& stol = {}) {
  std::vector<Complex> out;
  for (const FareyArc& arc : farey(order)) out.push_back(arc_contribution(arc, n, x, alpha, qtol, stol));
  return out;
}

/// Inequality Re(L^3 / (alpha - i v)^2) <= (Re L)^3 / alpha^2 as a margin.
inline double basic_inequality_margin(Complex l, double alpha, double v) {
  const Complex s{alpha, -v};
  return std::pow(l.real(), 3) / (alpha * alpha) - (l * l * l / (s * s)).real();
}

}  // namespace plpoly

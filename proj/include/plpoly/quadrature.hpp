#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "core.hpp"

namespace plpoly {

struct QuadratureTolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  unsigned max_depth = 40;
};

struct QuadratureResult {
  Complex value;
  double error_estimate;
};

/// Adaptive 15-point Gauss-Kronrod over [a, b] for a complex-valued integrand.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureTolerance& tol = {}) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0, l1 = 0.0;
  const Complex value =
      gauss_kronrod<double, 15>::integrate(std::forward<F>(f), a, b, tol.max_depth, tol.rel_tol, &error, &l1);
  if (!is_finite(value) || error > std::max(tol.abs_tol, tol.rel_tol * std::max(std::abs(value), l1)) * 10.0)
    throw ConvergenceError("integrate: adaptive quadrature did not reach its tolerance");
  return {value, error};
}

}  // namespace plpoly

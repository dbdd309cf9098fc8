#pragma once

// Phases R(1), R(2) of the sequence L_k and their common boundary
// {x : Re L_1(x) = Re L_2(x)}.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "core.hpp"
#include "special_functions.hpp"

namespace plpoly {

/// Truncation used for every phase comparison; reachable everywhere on the closed disk.
inline constexpr SeriesTolerance kPhaseTolerance{1e-13, 10'000'000};

enum class PhaseLabel { R1, R2, Boundary };

inline std::string to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::R1: return "R1";
    case PhaseLabel::R2: return "R2";
    case PhaseLabel::Boundary: return "BOUNDARY";
  }
  return "?";
}

/// A point where some L_k with k >= 3 reaches max(Re L_1, Re L_2).
class DominanceViolation : public std::runtime_error {
 public:
  DominanceViolation(Complex x, unsigned k, double gap)
      : std::runtime_error("Re L_" + std::to_string(k) + " is not dominated at x = (" +
                           std::to_string(x.real()) + ", " + std::to_string(x.imag()) + ")"),
        x_(x),
        k_(k),
        gap_(gap) {}
  Complex point() const { return x_; }
  unsigned k() const { return k_; }
  double gap() const { return gap_; }

 private:
  Complex x_;
  unsigned k_;
  double gap_;
};

inline double re_L(unsigned k, Complex x) { return phase_function(k, x, kPhaseTolerance).real(); }

/// Re L_1 - Re L_2; positive in R(1), negative in R(2).
inline double phase_difference(Complex x) { return re_L(1, x) - re_L(2, x); }

/// Smallest max(Re L_1, Re L_2) - Re L_k over 3 <= k <= k_max, with the k attaining it.
struct DominanceAudit {
  double min_gap;
  unsigned worst_k;
};

inline DominanceAudit dominance_audit(Complex x, unsigned k_max = 50) {
  const double top = std::max(re_L(1, x), re_L(2, x));
  DominanceAudit audit{std::numeric_limits<double>::infinity(), 0};
  for (unsigned k = 3; k <= k_max; ++k) {
    const double gap = top - re_L(k, x);
    if (gap < audit.min_gap) audit = {gap, k};
  }
  return audit;
}

/// R1 / R2 / BOUNDARY by comparing Re L_1 and Re L_2 at absolute tolerance tol.
/// Throws DominanceViolation if any 3 <= k <= k_max fails to stay strictly below.
inline PhaseLabel classify(Complex x, unsigned k_max = 50, double tol = 1e-9) {
  const double r = std::abs(x);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("classify: requires 0 < |x| < 1");
  if (k_max < 2) throw DomainError("classify: k_max must be at least 2");
  const DominanceAudit audit = dominance_audit(x, k_max);
  if (!(audit.min_gap > 0.0)) throw DominanceViolation(x, audit.worst_k, audit.min_gap);
  const double d = phase_difference(x);
  if (d > tol) return PhaseLabel::R1;
  if (d < -tol) return PhaseLabel::R2;
  return PhaseLabel::Boundary;
}

namespace detail {

/// Bisection for a sign change of f on [lo, hi]; stops when the bracket is below width.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double width) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (!(flo * fhi < 0.0)) throw ConvergenceError("bisect: no sign change on the bracket");
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// The real boundary point x* (negative), by bisection of
/// r -> Re L_1(-r) - Re L_2(-r) on (0.5, 0.99).
inline double real_crossing(double tol = 1e-12) {
  if (!(tol >= 1e-12)) throw DomainError("real_crossing: tol must be at least 1e-12");
  const double r = detail::bisect([](double s) { return phase_difference(Complex{-s, 0.0}); }, 0.5, 0.99, tol);
  return -r;
}

/// The angle theta* in (0.9 pi, pi) where the boundary meets the unit circle.
inline double circle_crossing(double tol = 1e-10) {
  if (!(tol >= 1e-10)) throw DomainError("circle_crossing: tol must be at least 1e-10");
  return detail::bisect([](double t) { return phase_difference(std::polar(1.0, t)); }, 0.9 * pi, pi, tol);
}

struct BoundaryPoint {
  double theta;
  Complex point;
  double residual;
};

/// Points on the level set Re L_1 = Re L_2, sorted by argument, plus the angles
/// of rays where no bracket was found.
struct BoundaryCurve {
  std::vector<BoundaryPoint> points;
  std::vector<double> gaps;

  /// theta,re,im,residual with 17 significant digits.
  void write_csv(std::ostream& os) const {
    const auto old = os.precision(17);
    os << "theta,re,im,residual\n";
    for (const auto& p : points)
      os << p.theta << ',' << p.point.real() << ',' << p.point.imag() << ',' << p.residual << '\n';
    os.precision(old);
  }
};

/// Radial bisection on n_points rays theta_i = theta* + (pi - theta*) i / n_points,
/// i = 1..n_points; the lower half is added by conjugation.
inline BoundaryCurve trace_boundary(std::size_t n_points, double tol = 1e-9, double theta_star = 0.0) {
  if (n_points < 2) throw DomainError("trace_boundary: n_points must be at least 2");
  if (theta_star == 0.0) theta_star = circle_crossing(1e-10);

  BoundaryCurve curve;
  for (std::size_t i = 1; i <= n_points; ++i) {
    const double theta = i == n_points ? pi : theta_star + (pi - theta_star) * static_cast<double>(i) / n_points;
    const Complex dir = i == n_points ? Complex{-1.0, 0.0} : std::polar(1.0, theta);
    auto along = [&](double r) { return phase_difference(r * dir); };

    double lo = 0.5, hi = 1.0;
    double flo = along(lo);
    const double fhi = along(hi);
    if (!(flo > 0.0 && fhi < 0.0)) {
      curve.gaps.push_back(theta);
      continue;
    }
    double mid = 0.5 * (lo + hi), fm = along(mid);
    while (std::abs(fm) > tol && hi - lo > 1e-15) {
      if (fm > 0.0) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
      mid = 0.5 * (lo + hi);
      fm = along(mid);
    }
    curve.points.push_back({theta, mid * dir, std::abs(fm)});
  }

  const std::size_t upper = curve.points.size();
  for (std::size_t i = 0; i < upper; ++i) {
    const BoundaryPoint& p = curve.points[i];
    if (p.point.imag() == 0.0) continue;
    curve.points.push_back({-p.theta, std::conj(p.point), p.residual});
  }
  std::sort(curve.points.begin(), curve.points.end(),
            [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.theta < b.theta; });
  return curve;
}

}  // namespace plpoly

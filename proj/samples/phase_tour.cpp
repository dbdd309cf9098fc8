// Walks along the negative axis and the unit circle, printing the phase labels,
// the main-term estimate and the exact value of Q_n(x).

#include <iomanip>
#include <iostream>

#include "plpoly/plpoly.hpp"

using namespace plpoly;

int main() {
  const unsigned n = 150;
  const PhaseConstants& c = phase_constants();
  std::cout << std::setprecision(12) << "x* = " << c.x_star << ", theta*/pi = " << c.theta_star / pi << "\n\n";

  std::cout << std::setprecision(6) << std::setw(10) << "x" << std::setw(10) << "phase" << std::setw(8) << "form" << std::setw(16) << "estimate"
            << std::setw(16) << "Q_n(x)" << "\n";
  for (double x : {0.6, 0.2, -0.2, -0.5, -0.8, -0.85, -0.95}) {
    const Complex exact = evaluate_adaptive(PlanePartitionTable::shared().get(n), x).value.to_complex();
    double estimate;
    const char* form;
    if (on_oscillatory_interval(x, false)) {
      estimate = estimate_oscillatory(x, n);
      form = "osc";
    } else if (classify(x) == PhaseLabel::R1) {
      estimate = estimate_R1(x, n).value.real();
      form = "r1";
    } else {
      estimate = estimate_R2(x, n).value.real();
      form = "r2";
    }
    std::cout << std::setw(10) << x << std::setw(10) << to_string(classify(x)) << std::setw(8) << form
              << std::setw(16) << estimate
              << std::setw(16) << exact.real() << "\n";
  }

  const BoundaryCurve curve = trace_boundary(6, 1e-10, c.theta_star);
  std::cout << "\nboundary points (upper half):\n";
  for (const BoundaryPoint& p : curve.points)
    if (p.point.imag() >= 0.0) std::cout << "  theta/pi = " << p.theta / pi << "  x = " << p.point << "\n";
}

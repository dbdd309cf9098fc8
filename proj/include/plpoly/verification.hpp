#pragma once

// Seeded numerical audits of the circle-method identities, the bounds and
// the phase dominance. Samples are drawn sequentially from the seed and
// evaluated in parallel, so reports do not depend on the job count.

#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "asymptotics.hpp"
#include "circle_method.hpp"
#include "exact_polynomials.hpp"
#include "parallel.hpp"
#include "phase_geometry.hpp"

namespace plpoly {

/// Portable uniform draws on top of mt19937_64 (the std distributions are
/// implementation-defined).
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  long integer(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Uniform in the disk of the given radius, never exactly 0.
  Complex disk(double radius) {
    for (;;) {
      const Complex z = std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(-pi, pi));
      if (z != Complex{0.0, 0.0}) return z;
    }
  }
  long coprime_below(long k) {
    if (k == 1) return 0;
    for (;;) {
      const long h = integer(1, k - 1);
      if (std::gcd(h, k) == 1) return h;
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct CircleSample {
  long h = 0, k = 1, n = 0;
  Complex x, w;
};

/// |x| <= x_radius, Re w in [0.05, 1], |Im w| <= 1, k <= k_max, n <= n_max.
inline std::vector<CircleSample> circle_samples(std::size_t count, std::uint64_t seed, double x_radius = 0.9,
                                                long k_max = 5, long n_max = 20) {
  SampleStream s(seed);
  std::vector<CircleSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CircleSample c;
    c.k = s.integer(1, k_max);
    c.h = s.coprime_below(c.k);
    c.n = s.integer(0, n_max);
    c.x = s.disk(x_radius);
    c.w = Complex{s.uniform(0.05, 1.0), s.uniform(-1.0, 1.0)};
    out.push_back(c);
  }
  return out;
}

enum class Bound { Below, AtLeast, Above };

struct Metric {
  std::string name;
  double value;
  double limit;
  Bound bound;

  bool passed() const {
    switch (bound) {
      case Bound::Below: return value < limit;
      case Bound::AtLeast: return value >= limit;
      case Bound::Above: return value > limit;
    }
    return false;
  }
};

inline const char* to_string(Bound b) {
  switch (b) {
    case Bound::Below: return "<";
    case Bound::AtLeast: return ">=";
    case Bound::Above: return ">";
  }
  return "?";
}

struct VerifyReport {
  std::string check;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Metric> metrics;

  bool passed() const {
    return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.passed(); });
  }
};

/// Largest factorization residual of ln P against ln omega + 2 pi i n h/k + Psi + g.
inline VerifyReport verify_factorization(std::size_t count, std::uint64_t seed, unsigned jobs = 1) {
  const auto samples = circle_samples(count, seed);
  const auto residuals = parallel_map(samples.size(), jobs, [&](std::size_t i) {
    const CircleSample& c = samples[i];
    return factorization_residual(c.h, c.k, c.n, c.x, c.w);
  });
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return {"factorization", count, seed, {{"max_residual", worst, 1e-9, Bound::Below}}};
}

/// Minimum margins of the |g|, |A(w) - A(0)| and |B - Psi - Ln(1-x^k)/(12k)| bounds
/// on `count` samples, and of the |omega| bound on `omega_count` samples with k <= 8.
inline VerifyReport verify_bounds(std::size_t count, std::uint64_t seed, unsigned jobs = 1,
                                  std::size_t omega_count = 100) {
  const double M = calibrated_M();
  const auto samples = circle_samples(count, seed);
  struct Margins {
    double g, a, b;
  };
  const auto margins = parallel_map(samples.size(), jobs, [&](std::size_t i) {
    const CircleSample& c = samples[i];
    return Margins{g_bound_margin(c.h, c.k, c.x, c.w, M),
                   A_difference_bound(c.k, c.x, c.w) - std::abs(A_difference(c.h, c.k, c.x, c.w)),
                   B_remainder_bound(c.k, c.x, c.w, M) - std::abs(B_remainder(c.k, c.x, c.w))};
  });
  const auto omega_samples = circle_samples(omega_count, seed ^ 0x9e3779b97f4a7c15ull, 0.9, 8, 1000);
  const auto omega_margins = parallel_map(omega_samples.size(), jobs, [&](std::size_t i) {
    const CircleSample& c = omega_samples[i];
    return omega_bound(c.k, std::abs(c.x)) - std::abs(omega(c.h, c.k, c.n, c.x));
  });

  double g_min = INFINITY, a_min = INFINITY, b_min = INFINITY, o_min = INFINITY;
  for (const Margins& m : margins) {
    g_min = std::min(g_min, m.g);
    a_min = std::min(a_min, m.a);
    b_min = std::min(b_min, m.b);
  }
  for (double m : omega_margins) o_min = std::min(o_min, m);
  return {"bounds",
          count,
          seed,
          {{"min_g_margin", g_min, 0.0, Bound::AtLeast},
           {"min_A_difference_margin", a_min, 0.0, Bound::AtLeast},
           {"min_B_remainder_margin", b_min, 0.0, Bound::AtLeast},
           {"min_omega_margin", o_min, 0.0, Bound::AtLeast}}};
}

/// Smallest gap max(Re L_1, Re L_2) - max_{3<=k<=k_max} Re L_k over disk samples with |x| <= radius.
inline VerifyReport verify_dominance(std::size_t count, std::uint64_t seed, unsigned jobs = 1,
                                     unsigned k_max = 50, double radius = 0.99) {
  SampleStream s(seed);
  std::vector<Complex> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) points.push_back(s.disk(radius));
  const auto audits = parallel_map(points.size(), jobs, [&](std::size_t i) { return dominance_audit(points[i], k_max); });
  double gap = INFINITY;
  for (const DominanceAudit& a : audits) gap = std::min(gap, a.min_gap);
  return {"dominance", count, seed, {{"min_gap", gap, 0.0, Bound::Above}}};
}

/// |saddle_numeric / saddle_closed - 1| against 5 n^{-2/3} at the listed points.
inline VerifyReport verify_saddle(const std::vector<std::pair<double, unsigned>>& cases = {{0.5, 200}, {0.5, 1600},
                                                                                             {-0.4, 200}, {-0.4, 1600}},
                                  unsigned jobs = 1) {
  const auto ratios = parallel_map(cases.size(), jobs, [&](std::size_t i) {
    const auto [x, n] = cases[i];
    return std::abs(saddle_numeric(1, n, x, default_delta()) / saddle_closed(1, n, x) - 1.0);
  });
  VerifyReport report{"saddle", cases.size(), 0, {}};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto [x, n] = cases[i];
    std::ostringstream name;
    name << "ratio_error(x=" << x << ",n=" << n << ")";
    report.metrics.push_back({name.str(), ratios[i], 5.0 * std::pow(static_cast<double>(n), -2.0 / 3.0), Bound::Below});
  }
  return report;
}

/// Sum of the F_N arc contributions against the exact Q_n(x), and the minor-arc mass
/// relative to the 0/1 arc for (n, x, N) = (200, 0.5, 6).
inline VerifyReport verify_arcsum(unsigned n = 30, Complex x = 0.5, long order = 3, unsigned jobs = 1) {
  const double alpha = contour_alpha(x, n, dominant_index(x));
  const auto arcs = farey(order);
  const auto parts = parallel_map(arcs.size(), jobs, [&](std::size_t i) { return arc_contribution(arcs[i], n, x, alpha); });
  Complex sum{0.0, 0.0};
  for (const Complex& p : parts) sum += p;
  const Complex exact = evaluate(plane_partition_polynomial(n), x, 256).value.to_complex();

  const unsigned big_n = 200;
  const Complex big_x = 0.5;
  const double big_alpha = contour_alpha(big_x, big_n, 1);
  const auto big_arcs = farey(6);
  const auto big_parts = parallel_map(big_arcs.size(), jobs, [&](std::size_t i) {
    return std::abs(arc_contribution(big_arcs[i], big_n, big_x, big_alpha));
  });
  double minor = 0.0;
  for (std::size_t i = 1; i < big_parts.size(); ++i) minor += big_parts[i];

  return {"arcsum",
          arcs.size() + big_arcs.size(),
          0,
          {{"arcsum_relative_error", std::abs(sum / exact - 1.0), 1e-8, Bound::Below},
           {"minor_over_major(n=200,x=0.5,N=6)", minor / big_parts.front(), 1e-3, Bound::Below}}};
}

}  // namespace plpoly

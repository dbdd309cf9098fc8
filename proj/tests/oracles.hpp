#pragma once

// Reference computations that share no code path with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using C = std::complex<long double>;

/// Plain partial sum of x^n/n^3, no tail control.
inline std::complex<double> trilog_partial(std::complex<double> x, int terms) {
  C s = 0, p = 1;
  const C xl(x.real(), x.imag());
  for (int n = 1; n <= terms; ++n) {
    p *= xl;
    const long double n3 = static_cast<long double>(n) * n * n;
    s += p / n3;
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

/// Trace generating function prod_{m>=1} (1 - x q^m)^{-m}, truncated at q^N.
/// Returns table[n][k] = number of plane partitions of n with trace k.
inline std::vector<std::vector<std::uint64_t>> trace_table(unsigned N) {
  std::vector<std::vector<std::uint64_t>> t(N + 1, std::vector<std::uint64_t>(N + 1, 0));
  t[0][0] = 1;
  for (unsigned m = 1; m <= N; ++m) {
    // multiply by (1 - x q^m)^{-m} = sum_j C(m+j-1, j) x^j q^{mj}
    std::vector<std::vector<std::uint64_t>> next(N + 1, std::vector<std::uint64_t>(N + 1, 0));
    for (unsigned n = 0; n <= N; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        if (t[n][k] == 0) continue;
        std::uint64_t binom = 1;  // C(m+j-1, j)
        for (unsigned j = 0; n + m * j <= N; ++j) {
          if (j > 0) binom = binom * (m + j - 1) / j;
          next[n + m * j][k + j] += t[n][k] * binom;
        }
      }
    t.swap(next);
  }
  return t;
}

/// MacMahon numbers PL(n) from prod (1 - q^m)^{-m}.
inline std::vector<std::uint64_t> macmahon(unsigned N) {
  std::vector<std::uint64_t> a(N + 1, 0);
  a[0] = 1;
  for (unsigned m = 1; m <= N; ++m)
    for (unsigned rep = 0; rep < m; ++rep)  // multiply by 1/(1 - q^m), m times
      for (unsigned n = m; n <= N; ++n) a[n] += a[n - m];
  return a;
}

/// sum_{l=1}^{terms} (x^l/l) e^{-l w}/(1 - e^{-l w})^2 by direct summation.
inline std::complex<double> b_series_brute(std::complex<double> x, std::complex<double> w, int terms) {
  std::complex<double> s = 0, p = 1;
  for (int l = 1; l <= terms; ++l) {
    p *= x;
    const std::complex<double> e = std::exp(-static_cast<double>(l) * w);
    s += p / static_cast<double>(l) * e / ((1.0 - e) * (1.0 - e));
  }
  return s;
}

/// ln P(x,u) = sum_l (x^l/l) u^l/(1 - u^l)^2 by direct summation.
inline std::complex<double> log_gen_brute(std::complex<double> x, std::complex<double> u, int terms) {
  std::complex<double> s = 0, px = 1, pu = 1;
  for (int l = 1; l <= terms; ++l) {
    px *= x;
    pu *= u;
    s += px / static_cast<double>(l) * pu / ((1.0 - pu) * (1.0 - pu));
  }
  return s;
}

/// Q_n(x) in long double from the trace table (small n only).
inline std::complex<double> q_value(const std::vector<std::vector<std::uint64_t>>& t, unsigned n, std::complex<double> x) {
  C s = 0, p = 1;
  const C xl(x.real(), x.imag());
  for (unsigned k = 0; k <= n; ++k) {
    s += static_cast<long double>(t[n][k]) * p;
    p *= xl;
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

}  // namespace oracle

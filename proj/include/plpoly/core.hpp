#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plpoly {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double zeta3 = 1.2020569031595942853997381615114499907649862923405;

/// Truncation policy for the power series used throughout the library.
struct SeriesTolerance {
  double abs_tol = 1e-14;
  std::int64_t max_terms = 10'000'000;

  void validate() const {
    if (!(abs_tol > 0.0) || max_terms < 1)
      throw std::invalid_argument("SeriesTolerance requires abs_tol > 0 and max_terms >= 1");
  }
};

/// Raised when a series cannot certify its tolerance within max_terms.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved_bound, std::int64_t terms)
      : std::runtime_error(what + " (achieved tail bound " + std::to_string(achieved_bound) +
                           " after " + std::to_string(terms) + " terms)"),
        achieved_bound_(achieved_bound),
        terms_(terms) {}

  double achieved_bound() const noexcept { return achieved_bound_; }
  std::int64_t terms() const noexcept { return terms_; }

 private:
  double achieved_bound_;
  std::int64_t terms_;
};

/// Argument outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Asymptotic formula requested outside the region where it applies.
class RegionError : public DomainError {
 public:
  RegionError(const std::string& what, std::string suggestion)
      : DomainError(what), suggestion_(std::move(suggestion)) {}
  const std::string& suggestion() const noexcept { return suggestion_; }

 private:
  std::string suggestion_;
};

/// Iteration or quadrature failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x^k by repeated squaring on an exact integer exponent (no complex log).
inline Complex ipow(Complex x, unsigned k) {
  Complex result{1.0, 0.0};
  while (k != 0) {
    if (k & 1u) result *= x;
    x *= x;
    k >>= 1;
  }
  return result;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Parses "<decimal>[+|-]<decimal>i" with no spaces; a bare real "<decimal>" is also accepted.
inline std::optional<Complex> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const std::string s(text);
  auto parse_real = [](const std::string& part, double& out) {
    if (part.empty()) return false;
    std::size_t used = 0;
    try {
      out = std::stod(part, &used);
    } catch (const std::exception&) {
      return false;
    }
    return used == part.size() && std::isfinite(out);
  };

  if (s.back() != 'i') {
    double re = 0;
    if (!parse_real(s, re)) return std::nullopt;
    return Complex{re, 0.0};
  }
  // Split at the last sign that is not the leading sign and not part of an exponent.
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return std::nullopt;
  double re = 0, im = 0;
  if (!parse_real(body.substr(0, split), re)) return std::nullopt;
  if (!parse_real(body.substr(split), im)) return std::nullopt;
  return Complex{re, im};
}

}  // namespace plpoly

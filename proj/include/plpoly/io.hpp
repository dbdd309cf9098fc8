#pragma once

// JSON views of the library's result types. Big integers are decimal strings.

#include <json.hpp>

#include "asymptotics.hpp"
#include "exact_polynomials.hpp"
#include "verification.hpp"
#include "zeros.hpp"

namespace plpoly {

using Json = nlohmann::ordered_json;

inline Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(const PlanePartitionPolynomial& p) {
  return Json{{"n", p.n}, {"coeffs", p.decimal_coeffs()}};
}

/// Inverse of to_json; throws std::invalid_argument on malformed input.
inline PlanePartitionPolynomial polynomial_from_json(const Json& j) {
  PlanePartitionPolynomial p;
  p.n = j.at("n").get<unsigned>();
  for (const auto& c : j.at("coeffs")) {
    mpz_class v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw std::invalid_argument("coefficient is not a decimal integer");
    p.coeffs.push_back(v);
  }
  if (p.coeffs.size() != p.n + 1u) throw std::invalid_argument("coefficient count must be n + 1");
  return p;
}

inline Json to_json(const AsymptoticEstimate& e) {
  return Json{{"value", complex_json(e.value)},
              {"prefactor", complex_json(e.prefactor)},
              {"exponent", complex_json(e.exponent)},
              {"phase", e.phase},
              {"error_class", e.error_class}};
}

inline Json to_json(const RootSet& set) {
  Json roots = Json::array();
  for (std::size_t i = 0; i < set.roots.size(); ++i)
    roots.push_back(Json{{"re", set.roots[i].real()},
                         {"im", set.roots[i].imag()},
                         {"residual", set.residuals[i]},
                         {"converged", static_cast<bool>(set.converged[i])}});
  return Json{{"n", set.n},
              {"precision_bits", static_cast<long>(set.precision_bits)},
              {"iterations", set.iterations},
              {"converged", set.all_converged()},
              {"roots", roots}};
}

inline Json to_json(const ZeroMatchReport& r) {
  Json pairs = Json::array();
  for (const auto& [a, p] : r.pairs) pairs.push_back(Json{{"actual", a}, {"predicted", p}});
  return Json{{"actual_in_window", r.actual_in_window},
              {"predicted_in_window", r.predicted_in_window},
              {"cardinality_mismatch", r.cardinality_mismatch()},
              {"mean_distance", r.mean_distance},
              {"max_distance", r.max_distance},
              {"pairs", pairs}};
}

inline Json to_json(const VerifyReport& r) {
  Json metrics = Json::array();
  for (const Metric& m : r.metrics)
    metrics.push_back(Json{{"name", m.name},
                           {"value", m.value},
                           {"requirement", std::string(to_string(m.bound)) + " " + Json(m.limit).dump()},
                           {"passed", m.passed()}});
  return Json{{"check", r.check}, {"samples", r.samples}, {"seed", r.seed}, {"passed", r.passed()}, {"metrics", metrics}};
}

}  // namespace plpoly

#pragma once

// Command-line front end. run() is kept in a header so tests can drive it
// with captured streams.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "plpoly/io.hpp"
#include "plpoly/plpoly.hpp"

namespace plpoly::cli {

enum ExitCode : int { kOk = 0, kRefused = 1, kNumerical = 2, kIoFailure = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default working precision, overridable through PLPOLY_PRECISION_BITS.
inline mpfr_prec_t default_precision() {
  const char* env = std::getenv("PLPOLY_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > (1 << 20))
    throw DomainError("PLPOLY_PRECISION_BITS must be an integer in [64, 1048576]");
  return bits;
}

namespace detail {

inline Complex complex_arg(const std::string& text) {
  const auto z = parse_complex(text);
  if (!z) throw DomainError("unparseable complex literal '" + text + "' (expected a+bi)");
  return *z;
}

/// Writes to --out when given, else to the captured stdout.
inline void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

inline void emit_json(const std::string& path, std::ostream& out, const Json& j) {
  emit(path, out, [&](std::ostream& os) { os << j.dump() << '\n'; });
}

/// 17 significant digits, the CSV float convention.
struct Csv17 {
  explicit Csv17(std::ostream& os) : os_(os), old_(os.precision(17)) {}
  ~Csv17() { os_.precision(old_); }
  std::ostream& os_;
  std::streamsize old_;
};

inline Complex exact_value(unsigned n, Complex x, mpfr_prec_t bits) {
  return evaluate_adaptive(PlanePartitionTable::shared().get(n), x, bits).value.to_complex();
}

/// Region used by `asym --region auto`.
inline std::string auto_region(Complex x) {
  if (on_oscillatory_interval(x, false)) return "osc";
  switch (classify(x)) {
    case PhaseLabel::R1: return "r1";
    case PhaseLabel::R2: return "r2";
    case PhaseLabel::Boundary: return "boundary";
  }
  return "r1";
}

inline Complex estimate_for(const std::string& region, Complex x, unsigned n, Json* detail) {
  if (region == "osc") {
    if (x.imag() != 0.0) throw RegionError("osc: x must be real", "r1");
    const double v = estimate_oscillatory(x.real(), n);
    if (detail) *detail = Json{{"value", complex_json(v)}, {"phase", oscillatory_phase(x.real(), n)}};
    return v;
  }
  AsymptoticEstimate e;
  if (region == "r1") e = estimate_R1(x, n);
  else if (region == "r2") e = estimate_R2(x, n);
  else e = estimate_boundary(x, n);
  if (detail) *detail = to_json(e);
  return e.value;
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 refused input, 2 numerical failure, 3 I/O failure.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Plane partition polynomials Q_n(x) = sum_k pp_k(n) x^k and their circle-method asymptotics", "plpoly"};
  app.require_subcommand(1);

  unsigned n = 0, points = 200, samples = 100, jobs = 1, resolution = 21;
  std::uint64_t seed = 1;
  std::string x_text, out_path, format = "json", region = "auto";
  long precision = 0;
  double tol = 1e-9, margin = 1e-3;
  bool compare = false, match = false;

  auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "Write the artifact to this file instead of stdout"); };
  auto add_precision = [&](CLI::App* c) {
    c->add_option("--precision", precision, "Working precision in bits (default 256 or PLPOLY_PRECISION_BITS)")
        ->check(CLI::Range(64L, 1L << 20));
  };

  auto* coeffs = app.add_subcommand(
      "coeffs", "Exact coefficients pp_k(n) of Q_n from n Q_n = sum_{j=1}^n a_j(x) Q_{n-j}, a_j = sum_{d|j} (j/d)^2 x^d. "
                "CSV columns: k,coefficient");
  coeffs->add_option("--n", n, "Index n")->required()->check(CLI::Range(0u, 20000u));
  coeffs->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_out(coeffs);

  auto* eval = app.add_subcommand(
      "eval", "Q_n(x) by Horner's rule on exact coefficients with error bound (3n+2) 2^-bits sum_k |c_k| |x|^k; "
              "precision doubles until the bound is below 1e-8 |Q_n(x)|");
  eval->add_option("--n", n, "Index n")->required()->check(CLI::Range(0u, 20000u));
  eval->add_option("--x", x_text, "Point x as a+bi")->required();
  add_precision(eval);
  add_out(eval);

  auto* asym = app.add_subcommand(
      "asym", "Main term of Q_n(x): r1 = (1-x)^{1/12} sqrt(L_1/(6 pi n^{4/3})) exp(3/2 n^{2/3} L_1); "
              "r2 = (-1)^n (1-x^2)^{1/24} ((1-x)/(1+x))^{1/8} sqrt(L_2/(6 pi n^{4/3})) exp(3/2 n^{2/3} L_2); "
              "osc = the real cosine form on (x*, 0); boundary = r1 + r2. L_k(x) = (1/k) (2 Li3(x^k))^{1/3}");
  asym->add_option("--n", n, "Index n")->required()->check(CLI::Range(1u, 20000u));
  asym->add_option("--x", x_text, "Point x as a+bi with 0 < |x| < 1")->required();
  asym->add_option("--region", region, "auto|r1|r2|osc|boundary")
      ->check(CLI::IsMember({"auto", "r1", "r2", "osc", "boundary"}));
  asym->add_flag("--compare", compare, "Also evaluate Q_n(x) exactly and report |Q_n/estimate - 1|");
  add_precision(asym);
  add_out(asym);

  auto* phase = app.add_subcommand("phase", "Phases of Re L_k(x), L_k(x) = (1/k) (2 Li3(x^k))^{1/3}");
  phase->require_subcommand(1);
  auto* classify_cmd = phase->add_subcommand(
      "classify", "R1 if Re L_1 > Re L_2 + tol, R2 if Re L_2 > Re L_1 + tol, else BOUNDARY; asserts Re L_k < "
                  "max(Re L_1, Re L_2) for 3 <= k <= 50");
  classify_cmd->add_option("--x", x_text, "Point x as a+bi with 0 < |x| < 1")->required();
  classify_cmd->add_option("--tol", tol, "Boundary tolerance")->check(CLI::PositiveNumber);
  auto* boundary_cmd = phase->add_subcommand(
      "boundary", "Level set Re L_1(x) = Re L_2(x) by radial bisection for theta in (theta*, pi] plus conjugates. "
                  "CSV columns: theta,re,im,residual");
  boundary_cmd->add_option("--points", points, "Rays in the upper half plane")->check(CLI::Range(2u, 100000u));
  boundary_cmd->add_option("--tol", tol, "Bisection tolerance on |Re L_1 - Re L_2|")->check(CLI::PositiveNumber);
  add_out(boundary_cmd);
  auto* constants_cmd = phase->add_subcommand(
      "constants", "x* (the real root of Re L_1 = Re L_2) and theta* (its root on the unit circle)");
  add_out(constants_cmd);

  auto* zeros = app.add_subcommand(
      "zeros", "All roots of Q_n by Aberth-Ehrlich iteration on the exact coefficients. CSV columns: re,im,residual");
  zeros->add_option("--n", n, "Index n")->check(CLI::Range(1u, 400u));
  zeros->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_precision(zeros);
  add_out(zeros);
  auto* predict = zeros->add_subcommand(
      "predict", "Zeros in (x*, 0) where (3 sqrt3/4) 2^{1/3} n^{2/3} |Li3(x)|^{1/3} + pi/6 = pi/2 + j pi");
  predict->add_option("--n", n, "Index n")->required()->check(CLI::Range(1u, 400u));
  predict->add_flag("--match", match, "Pair the predictions with the actual real roots");
  predict->add_option("--margin", margin, "Excluded margin at x* and 0 when matching")->check(CLI::PositiveNumber);
  add_precision(predict);
  add_out(predict);

  auto* verify = app.add_subcommand("verify", "Seeded numerical audits; exit 2 when a check fails");
  verify->require_subcommand(1);
  std::vector<CLI::App*> verify_cmds;
  auto add_verify = [&](const char* name, const char* help) {
    auto* c = verify->add_subcommand(name, help);
    c->add_option("--samples", samples, "Number of random samples")->check(CLI::Range(1u, 10000000u));
    c->add_option("--seed", seed, "Random seed");
    c->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    add_out(c);
    verify_cmds.push_back(c);
    return c;
  };
  add_verify("factorization",
             "ln P(x, e^{-w + 2 pi i h/k}) = ln omega_{h,k,n}(x) + 2 pi i n h/k + Li3(x^k)/(k^3 w^2) + g_{h,k}(x,w), "
             "residual mod 2 pi i; |x| <= 0.9, Re w in [0.05,1], |Im w| <= 1, k <= 5, n <= 20");
  add_verify("bounds",
             "Margins of |g| <= A-bound + (M |w|^2 k + (2/(1-e^{-pi Re w/|w|})^3 + 1) |x|^{pi/|w|})/(1-|x|^2), "
             "of the A(w)-A(0) and B - Psi - Ln(1-x^k)/(12k) bounds, and of "
             "|omega| <= 2^{1/12} exp((k^2/16)(zeta(3) - ln(1-|x|))) for k <= 8");
  add_verify("dominance", "min over disk samples of max(Re L_1, Re L_2) - max_{3<=k<=50} Re L_k, required > 0");
  add_verify("saddle",
             "Quadrature of exp(n^{2/3}(L^3/(2(Re L - iz)^2) + Re L - iz))/(2 pi n^{1/3}) against "
             "sqrt(L/3) exp(3/2 n^{2/3} L)/sqrt(2 pi n^{4/3})");
  add_verify("arcsum", "Sum over Farey arcs of omega_{h,k,n} I_{h,k,n} against Q_n(x), and the minor-arc share");

  auto* grid = app.add_subcommand(
      "grid", "Raster of the disk: phase label and |Q_n(x)/estimate - 1| under the auto region policy. "
              "CSV columns: re,im,label,region,rel_error");
  grid->add_option("--n", n, "Index n")->required()->check(CLI::Range(1u, 2000u));
  grid->add_option("--resolution", resolution, "Grid points per axis on [-1, 1]")->check(CLI::Range(2u, 2001u));
  grid->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  add_precision(grid);
  add_out(grid);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kRefused;
  }

  try {
    const mpfr_prec_t bits = precision > 0 ? precision : default_precision();
    const Complex x = x_text.empty() ? Complex{} : detail::complex_arg(x_text);

    if (*coeffs) {
      const auto& p = PlanePartitionTable::shared().get(n);
      if (format == "json") {
        detail::emit_json(out_path, out, to_json(p));
      } else {
        detail::emit(out_path, out, [&](std::ostream& os) {
          os << "k,coefficient\n";
          const auto digits = p.decimal_coeffs();
          for (std::size_t k = 0; k < digits.size(); ++k) os << k << ',' << digits[k] << '\n';
        });
      }
    } else if (*eval) {
      const EvalResult r = evaluate_adaptive(PlanePartitionTable::shared().get(n), x, bits);
      detail::emit_json(out_path, out,
                        Json{{"n", n},
                             {"x", complex_json(x)},
                             {"value", complex_json(r.value.to_complex())},
                             {"value_re_decimal", r.value.real().to_string(40)},
                             {"value_im_decimal", r.value.imag().to_string(40)},
                             {"abs_error_bound", r.abs_error_bound},
                             {"precision_bits", static_cast<long>(r.precision_bits)}});
    } else if (*asym) {
      const double r = std::abs(x);
      if (!(r > 0.0 && r < 1.0)) throw DomainError("asym: requires 0 < |x| < 1");
      const std::string chosen = region == "auto" ? detail::auto_region(x) : region;
      Json estimate;
      const Complex value = detail::estimate_for(chosen, x, n, &estimate);
      Json j{{"n", n}, {"x", complex_json(x)}, {"region", chosen}, {"estimate", estimate}};
      if (compare) {
        const Complex exact = detail::exact_value(n, x, bits);
        j["exact"] = complex_json(exact);
        j["relative_error"] = std::abs(exact / value - 1.0);
      }
      detail::emit_json(out_path, out, j);
    } else if (*classify_cmd) {
      const double r = std::abs(x);
      if (!(r > 0.0 && r < 1.0)) throw DomainError("phase classify: requires 0 < |x| < 1");
      detail::emit_json(out_path, out, Json{{"label", to_string(classify(x, 50, tol))}});
    } else if (*boundary_cmd) {
      const BoundaryCurve curve = trace_boundary(points, tol);
      detail::emit(out_path, out, [&](std::ostream& os) { curve.write_csv(os); });
      if (!curve.gaps.empty()) err << "warning: " << curve.gaps.size() << " rays without a bracket\n";
    } else if (*constants_cmd) {
      const PhaseConstants& c = phase_constants();
      detail::emit_json(out_path, out,
                        Json{{"x_star", c.x_star}, {"theta_star", c.theta_star}, {"theta_star_over_pi", c.theta_star / pi}});
    } else if (*predict) {
      const auto predicted = predicted_interval_zeros(n);
      Json j{{"n", n}, {"predicted", predicted}};
      if (match) j["match"] = to_json(match_zeros(roots(n, bits), predicted, margin));
      detail::emit_json(out_path, out, j);
    } else if (*zeros) {
      if (n == 0) throw DomainError("zeros: --n is required");
      const RootSet set = roots(n, bits);
      if (format == "json") {
        detail::emit_json(out_path, out, to_json(set));
      } else {
        detail::emit(out_path, out, [&](std::ostream& os) { set.write_csv(os); });
      }
      if (!set.all_converged()) {
        err << "error: iteration cap reached before every root converged\n";
        return kNumerical;
      }
    } else if (*verify) {
      VerifyReport report;
      const std::string which = verify->get_subcommands().front()->get_name();
      if (which == "factorization") report = verify_factorization(samples, seed, jobs);
      else if (which == "bounds") report = verify_bounds(samples, seed, jobs);
      else if (which == "dominance") report = verify_dominance(samples, seed, jobs);
      else if (which == "saddle") report = verify_saddle({{0.5, 200}, {0.5, 1600}, {-0.4, 200}, {-0.4, 1600}}, jobs);
      else report = verify_arcsum(30, 0.5, 3, jobs);
      detail::emit_json(out_path, out, to_json(report));
      if (!report.passed()) return kNumerical;
    } else if (*grid) {
      std::vector<Complex> cells;
      for (unsigned i = 0; i < resolution; ++i)
        for (unsigned j = 0; j < resolution; ++j) {
          const Complex z{-1.0 + 2.0 * j / (resolution - 1), -1.0 + 2.0 * i / (resolution - 1)};
          const double r = std::abs(z);
          if (r > 0.0 && r < 1.0) cells.push_back(z);
        }
      PlanePartitionTable::shared().get(n);
      struct Row {
        std::string label, region;
        double error;
      };
      const auto rows = parallel_map(cells.size(), jobs, [&](std::size_t i) {
        const Complex z = cells[i];
        const std::string reg = detail::auto_region(z);
        const std::string label = to_string(classify(z));
        const Complex est = detail::estimate_for(reg, z, n, nullptr);
        return Row{label, reg, std::abs(detail::exact_value(n, z, bits) / est - 1.0)};
      });
      detail::emit(out_path, out, [&](std::ostream& os) {
        detail::Csv17 fmt(os);
        os << "re,im,label,region,rel_error\n";
        for (std::size_t i = 0; i < cells.size(); ++i)
          os << cells[i].real() << ',' << cells[i].imag() << ',' << rows[i].label << ',' << rows[i].region << ','
             << rows[i].error << '\n';
      });
    }
  } catch (const RegionError& e) {
    err << "refused: " << e.what() << " (try --region " << e.suggestion() << ")\n";
    return kRefused;
  } catch (const DomainError& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}

}  // namespace plpoly::cli

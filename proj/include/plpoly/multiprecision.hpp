#pragma once

// Thin value-semantic wrappers over MPFR. Every operation rounds to nearest at
// the precision of the left operand (or the maximum of both operands for the
// free binary operators).

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <string>
#include <utility>

namespace plpoly {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 256) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(double d, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(const mpz_class& z, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal string with the given number of significant digits.
  std::string to_string(int digits = 40) const {
    char* buf = nullptr;
    const std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t joint_precision(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace detail

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::joint_precision(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::joint_precision(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::joint_precision(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::joint_precision(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

/// Complex number over BigFloat (the library's high-precision complex scalar).
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t bits = 256) : re_(bits), im_(bits) {}
  BigComplex(std::complex<double> z, mpfr_prec_t bits) : re_(z.real(), bits), im_(z.imag(), bits) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  BigFloat& real() { return re_; }
  BigFloat& imag() { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return sqrt(norm()); }

  BigComplex& operator+=(const BigComplex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat re = re_ * o.re_ - im_ * o.im_;
    BigFloat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    const BigFloat den = o.norm();
    BigFloat re = (re_ * o.re_ + im_ * o.im_) / den;
    BigFloat im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  BigComplex& operator*=(const BigFloat& s) { re_ *= s; im_ *= s; return *this; }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex conj(const BigComplex& a) { return {a.re_, -a.im_}; }

 private:
  BigFloat re_;
  BigFloat im_;
};

}  // namespace plpoly

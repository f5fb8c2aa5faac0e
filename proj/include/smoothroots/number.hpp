#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

namespace smoothroots {

// RAII wrapper around mpfr_t. New values take the process-wide precision set
// by BigFloat::set_digits (default 64 decimal digits).
class BigFloat {
 public:
  BigFloat();
  BigFloat(long v);  // NOLINT
  BigFloat(int v) : BigFloat(static_cast<long>(v)) {}  // NOLINT
  BigFloat(double v);  // NOLINT
  explicit BigFloat(const mpq_class& q);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static void set_digits(int decimal_digits);
  static int digits();

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const;
  // Exact value of the binary float.
  mpq_class to_rational() const;
  std::string to_string(int digits = 0) const;
  int sign() const;
  bool is_nan() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);

 private:
  mpfr_t v_;
};

// Absolute threshold under which a float is treated as zero.
// Tied to the working precision: 10^-(5/8 * digits).
const BigFloat& float_zero_tolerance();

// Best rational approximation with denominator <= max_den; returned only when
// it reproduces x to within rel_tol * max(1, |x|).
std::optional<mpq_class> rationalize(const BigFloat& x, const mpz_class& max_den,
                                     const BigFloat& rel_tol);
std::optional<mpq_class> rationalize(const BigFloat& x);

// Exact rational or high-precision float.
class Real {
 public:
  Real() : v_(mpq_class(0)) {}
  Real(long v) : v_(mpq_class(v)) {}  // NOLINT
  Real(int v) : v_(mpq_class(v)) {}  // NOLINT
  Real(const mpq_class& q) : v_(q) {}  // NOLINT
  Real(const BigFloat& f) : v_(f) {}  // NOLINT
  static Real rational(long num, long den);
  static Real from_double(double d);  // exact binary value
  static Real parse(std::string_view s);

  bool exact() const { return v_.index() == 0; }
  const mpq_class& q() const { return std::get<0>(v_); }
  const BigFloat& f() const { return std::get<1>(v_); }
  BigFloat to_float() const;
  double to_double() const;

  int sign() const;  // float values within float_zero_tolerance() report 0
  bool is_zero() const { return sign() == 0; }
  bool is_exact_zero() const { return exact() && sgn(q()) == 0; }

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  // Ordering on values (float comparisons are raw, no tolerance).
  friend bool operator<(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }

  friend Real abs(const Real& a);
  // Exact when a is the square of a rational, float otherwise. a must be >= 0.
  friend Real sqrt(const Real& a);

  // Replace a float by a nearby small-denominator rational when one exists.
  Real rationalized() const;

  std::string str() const;

 private:
  std::variant<mpq_class, BigFloat> v_;
};

// Complex number over Real. The imaginary part is an exact zero for real data,
// which keeps the real path cheap.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT
  Scalar(int v) : re_(v) {}  // NOLINT
  Scalar(const mpq_class& q) : re_(q) {}  // NOLINT
  Scalar(const BigFloat& f) : re_(f) {}  // NOLINT
  Scalar(Real re) : re_(std::move(re)) {}  // NOLINT
  Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  static Scalar rational(long num, long den) { return Scalar(Real::rational(num, den)); }
  static Scalar from_complex(std::complex<double> z);
  static Scalar i() { return Scalar(Real(0), Real(1)); }
  // Accepts "p/q", decimals, and complex forms such as "1/2-3i" or "i".
  static Scalar parse(std::string_view s);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  bool exact() const { return re_.exact() && im_.exact(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_exact_zero() const { return re_.is_exact_zero() && im_.is_exact_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }
  Real norm2() const;
  Real abs() const;
  double abs_double() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  // Equality up to the zero test (exact for rationals).
  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Principal square root; exact for squares of (Gaussian) rationals on the real axis.
  friend Scalar sqrt(const Scalar& a);

  Scalar rationalized() const { return Scalar(re_.rationalized(), im_.rationalized()); }
  Scalar to_float() const { return Scalar(Real(re_.to_float()), Real(im_.to_float())); }

  std::string str() const;

 private:
  Real re_;
  Real im_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat cos(const BigFloat& a);
BigFloat sin(const BigFloat& a);
Real abs(const Real& a);
Real sqrt(const Real& a);
Scalar sqrt(const Scalar& a);
Scalar pow(const Scalar& a, int k);

}  // namespace smoothroots

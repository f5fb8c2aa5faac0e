#pragma once

#include <span>
#include <string>
#include <vector>

#include "smoothroots/number.hpp"

namespace smoothroots {

inline constexpr int kDefaultOrder = 32;

enum class Mode { Real, Complex };

// Order of vanishing at t = 0, relative to the truncation order.
struct Multiplicity {
  enum class Kind { Finite, FlatToOrder };
  Kind kind = Kind::Finite;
  int value = 0;  // m for Finite, N for FlatToOrder

  static Multiplicity finite(int m) { return {Kind::Finite, m}; }
  static Multiplicity flat_to_order(int n) { return {Kind::FlatToOrder, n}; }
  bool finite() const { return kind == Kind::Finite; }
  bool flat() const { return kind == Kind::FlatToOrder; }
  // True when the data proves m(f) >= k.
  bool at_least(int k) const { return finite() ? value >= k : k <= value + 1; }
  std::string str() const;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

// Truncated power series c_0 + c_1 t + ... + c_N t^N.
// `polynomial` records that every coefficient beyond N is known to vanish.
class Jet {
 public:
  Jet() : Jet(0) {}
  explicit Jet(int order);  // all-zero jet, not known to be exactly zero
  Jet(std::vector<Scalar> coeffs, bool polynomial = false);

  static Jet zero(int order);  // exact zero
  static Jet constant(const Scalar& c, int order);
  static Jet variable(int order);  // t
  static Jet monomial(const Scalar& c, int power, int order);
  // Jet of the polynomial sum c_k t^k; coefficients past `order` must vanish.
  static Jet polynomial(std::vector<Scalar> coeffs, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::span<const Scalar> coeffs() const { return c_; }
  bool is_polynomial() const { return polynomial_; }
  bool exact_zero() const;
  bool all_zero() const;
  bool exact() const;
  bool is_real() const;
  int degree() const;  // highest nonzero stored index, -1 if all zero

  Multiplicity multiplicity() const;

  Jet truncated(int order) const;
  // Only polynomial jets may grow their order.
  Jet extended(int order) const;
  Jet shift_out(int k) const;  // g with t^k g = f
  Jet shift_in(int k) const;   // t^k f, order grows by k
  Jet derivative() const;
  Jet conj() const;
  Jet real_part() const;
  Jet imag_part() const;
  Jet to_float() const;
  Jet rationalized() const;

  Scalar evaluate(const Scalar& t) const;
  double evaluate(double t) const;

  Jet operator-() const;
  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Scalar& s);
  friend Jet operator*(const Scalar& s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, const Scalar& s);
  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  Jet recip() const;
  // Square root with positive leading coefficient. Complex mode takes the
  // principal root of the leading coefficient instead of rejecting it.
  Jet sqrt(Mode mode = Mode::Real) const;

  // Coefficientwise equality up to the common order (zero test per Scalar).
  bool equals_to_order(const Jet& o, int order) const;
  friend bool operator==(const Jet& a, const Jet& b);

  std::string str() const;

 private:
  std::vector<Scalar> c_;
  bool polynomial_ = false;
};

Jet pow(const Jet& a, int k);

}  // namespace smoothroots

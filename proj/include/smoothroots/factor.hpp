#pragma once

#include <vector>

#include "smoothroots/jet.hpp"
#include "smoothroots/symmetric.hpp"

namespace smoothroots {

// Monic polynomial in x whose coefficients are jets in t, stored in the
// alternating convention x^n - a_1 x^{n-1} + ... + (-1)^n a_n.
class PolyCurve {
 public:
  PolyCurve() = default;  // the constant polynomial 1
  // All coefficients are truncated to the smallest order present.
  explicit PolyCurve(std::vector<Jet> a, int order = -1);
  // From ascending standard coefficients c_0..c_{n-1}; the leading 1 is implied.
  static PolyCurve from_standard(const std::vector<Jet>& c);
  static PolyCurve constant_in_t(const PolyCoeffs& p, int order);
  static PolyCurve from_root_jets(const std::vector<Jet>& roots);
  static PolyCurve one(int order);

  int degree() const { return static_cast<int>(a_.size()); }
  int order() const { return order_; }
  const Jet& a(int k) const { return a_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Jet>& coeffs() const { return a_; }
  // Ascending standard coefficients c_0..c_n with c_n = 1.
  std::vector<Jet> standard() const;

  PolyCoeffs at_zero() const;
  PolyCoeffs at(const Scalar& t) const;
  Jet evaluate(const Jet& x) const;
  PolyCurve truncated(int order) const;
  bool exact() const;
  bool is_real() const;

  friend PolyCurve operator*(const PolyCurve& p, const PolyCurve& q);
  bool equals_to_order(const PolyCurve& o, int order) const;
  std::string str() const;

 private:
  std::vector<Jet> a_;
  int order_ = 0;
};

// Q(y) = P(y + s).
PolyCurve substitute_shift(const PolyCurve& p, const Jet& s);

struct FactorPair {
  PolyCurve p1;
  PolyCurve p2;
};

using RootCluster = std::vector<Scalar>;

// Groups the numeric roots of a0 by single linkage at absolute distance tol.
// Clusters are ordered by the real, then imaginary, part of their centroid.
std::vector<RootCluster> cluster_roots(const PolyCoeffs& a0, double tol);

// Default clustering distance: rel_tol scaled by max(1, largest root modulus).
double cluster_tolerance(const std::vector<Scalar>& roots, double rel_tol = 1e-6);

// Lifts the factorization of P(0) given by two disjoint root clusters to a
// factorization of P to its full order.
FactorPair hensel_split(const PolyCurve& p, const RootCluster& first, const RootCluster& second);

// Quotient of P by (x - x1) in the alternating convention.
PolyCoeffs horner_deflate(const PolyCoeffs& a, const Scalar& x1, double tol = 1e-10);

}  // namespace smoothroots

#include "smoothroots/jet.hpp"

#include <algorithm>
#include <sstream>

#include "smoothroots/error.hpp"

namespace smoothroots {

std::string Multiplicity::str() const {
  return finite() ? "Finite(" + std::to_string(value) + ")"
                  : "FlatToOrder(" + std::to_string(value) + ")";
}

Jet::Jet(int order) {
  if (order < 0) throw Error(Errc::PreconditionViolated, "negative jet order");
  c_.assign(static_cast<std::size_t>(order) + 1, Scalar());
}

Jet::Jet(std::vector<Scalar> coeffs, bool polynomial)
    : c_(std::move(coeffs)), polynomial_(polynomial) {
  if (c_.empty()) throw Error(Errc::PreconditionViolated, "jet needs at least one coefficient");
}

Jet Jet::zero(int order) {
  Jet j(order);
  j.polynomial_ = true;
  return j;
}

Jet Jet::constant(const Scalar& c, int order) {
  Jet j = zero(order);
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(int order) { return monomial(Scalar(1), 1, order); }

Jet Jet::monomial(const Scalar& c, int power, int order) {
  Jet j = zero(order);
  if (power <= order) {
    j.c_[static_cast<std::size_t>(power)] = c;
  } else if (!c.is_zero()) {
    j.polynomial_ = false;
  }
  return j;
}

Jet Jet::polynomial(std::vector<Scalar> coeffs, int order) {
  Jet j = zero(order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (static_cast<int>(k) <= order) {
      j.c_[k] = coeffs[k];
    } else if (!coeffs[k].is_zero()) {
      j.polynomial_ = false;
    }
  }
  return j;
}

bool Jet::exact_zero() const {
  return polynomial_ &&
         std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_exact_zero(); });
}

bool Jet::all_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Jet::exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.exact(); });
}

bool Jet::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
}

int Jet::degree() const {
  for (int i = order(); i >= 0; --i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

Multiplicity Jet::multiplicity() const {
  for (int i = 0; i <= order(); ++i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return Multiplicity::finite(i);
  return Multiplicity::flat_to_order(order());
}

Jet Jet::truncated(int order) const {
  if (order >= this->order()) return *this;
  if (order < 0) throw Error(Errc::TruncationExhausted, "truncation below order 0");
  Jet j(std::vector<Scalar>(c_.begin(), c_.begin() + order + 1));
  j.polynomial_ = polynomial_ && degree() <= order;
  return j;
}

Jet Jet::extended(int order) const {
  if (order <= this->order()) return truncated(order);
  if (!polynomial_) throw Error(Errc::PreconditionViolated, "only polynomial jets can be extended");
  Jet j = *this;
  j.c_.resize(static_cast<std::size_t>(order) + 1);
  return j;
}

Jet Jet::shift_out(int k) const {
  if (k < 0) throw Error(Errc::PreconditionViolated, "negative shift");
  for (int i = 0; i < k && i <= order(); ++i)
    if (!c_[static_cast<std::size_t>(i)].is_zero())
      throw Error(Errc::MultiplicityTooLow,
                  "coefficient of t^" + std::to_string(i) + " is nonzero, cannot divide by t^" +
                      std::to_string(k));
  if (k > order())
    throw Error(Errc::TruncationExhausted,
                "dividing by t^" + std::to_string(k) + " exhausts order " + std::to_string(order()));
  Jet j(std::vector<Scalar>(c_.begin() + k, c_.end()));
  j.polynomial_ = polynomial_;
  return j;
}

Jet Jet::shift_in(int k) const {
  if (k < 0) throw Error(Errc::PreconditionViolated, "negative shift");
  std::vector<Scalar> c(static_cast<std::size_t>(k), Scalar());
  c.insert(c.end(), c_.begin(), c_.end());
  return Jet(std::move(c), polynomial_);
}

Jet Jet::derivative() const {
  if (order() == 0) {
    Jet j(0);
    j.polynomial_ = polynomial_;
    return j;
  }
  std::vector<Scalar> c;
  c.reserve(c_.size() - 1);
  for (int i = 1; i <= order(); ++i) c.push_back(c_[static_cast<std::size_t>(i)] * Scalar(i));
  return Jet(std::move(c), polynomial_);
}

Jet Jet::conj() const {
  Jet j = *this;
  for (auto& s : j.c_) s = s.conj();
  return j;
}

Jet Jet::real_part() const {
  Jet j = *this;
  for (auto& s : j.c_) s = Scalar(s.re());
  return j;
}

Jet Jet::imag_part() const {
  Jet j = *this;
  for (auto& s : j.c_) s = Scalar(s.im());
  return j;
}

Jet Jet::to_float() const {
  Jet j = *this;
  for (auto& s : j.c_) s = s.to_float();
  return j;
}

Jet Jet::rationalized() const {
  Jet j = *this;
  for (auto& s : j.c_) s = s.rationalized();
  return j;
}

Scalar Jet::evaluate(const Scalar& t) const {
  Scalar acc;
  for (int i = order(); i >= 0; --i) acc = acc * t + c_[static_cast<std::size_t>(i)];
  return acc;
}

double Jet::evaluate(double t) const {
  double acc = 0;
  for (int i = order(); i >= 0; --i) acc = acc * t + c_[static_cast<std::size_t>(i)].re().to_double();
  return acc;
}

Jet Jet::operator-() const {
  Jet j = *this;
  for (auto& s : j.c_) s = -s;
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  const int m = std::min(a.order(), b.order());
  std::vector<Scalar> c(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
  const bool poly = a.polynomial_ && b.polynomial_ && a.degree() <= m && b.degree() <= m;
  return Jet(std::move(c), poly);
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator*(const Jet& a, const Jet& b) {
  const int m = std::min(a.order(), b.order());
  if (a.exact_zero() || b.exact_zero()) return Jet::zero(m);
  const int da = a.degree(), db = b.degree();
  std::vector<Scalar> c(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m && i <= da; ++i) {
    if (a[i].is_exact_zero()) continue;
    for (int j = 0; i + j <= m && j <= db; ++j) {
      if (b[j].is_exact_zero()) continue;
      c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  const bool poly = a.polynomial_ && b.polynomial_ && da + db <= m;
  return Jet(std::move(c), poly);
}

Jet operator*(const Jet& a, const Scalar& s) {
  if (s.is_exact_zero()) return Jet::zero(a.order());
  Jet j = a;
  for (auto& x : j.c_) x = x * s;
  return j;
}

Jet operator/(const Jet& a, const Scalar& s) {
  Jet j = a;
  for (auto& x : j.c_) x = x / s;
  return j;
}

Jet Jet::recip() const {
  if (c_[0].is_zero()) throw Error(Errc::ZeroConstantTerm, "reciprocal needs a nonzero constant term");
  const int n = order();
  std::vector<Scalar> y(static_cast<std::size_t>(n) + 1);
  const Scalar inv0 = Scalar(1) / c_[0];
  y[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar acc;
    for (int i = 1; i <= k; ++i) {
      if (c_[static_cast<std::size_t>(i)].is_exact_zero()) continue;
      acc += c_[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
    }
    y[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return Jet(std::move(y), polynomial_ && degree() == 0);
}

Jet Jet::sqrt(Mode mode) const {
  if (exact_zero()) return *this;
  const Multiplicity m = multiplicity();
  if (m.flat()) throw Error(Errc::Flat, "square root of a jet flat to order " + std::to_string(order()));
  if (m.value % 2 != 0)
    throw Error(Errc::OddMultiplicity, "multiplicity " + std::to_string(m.value) + " is odd");
  const int half = m.value / 2;
  const Jet g = shift_out(m.value);
  const Scalar& g0 = g[0];
  if (mode == Mode::Real) {
    if (!g0.is_real()) throw Error(Errc::PreconditionViolated, "complex coefficient in real mode");
    if (g0.re().sign() < 0) throw Error(Errc::NegativeLeading, "leading coefficient is negative");
  }
  const int n = g.order();
  std::vector<Scalar> y(static_cast<std::size_t>(n) + 1);
  y[0] = smoothroots::sqrt(mode == Mode::Real ? Scalar(g0.re()) : g0);
  const Scalar inv2y0 = Scalar(1) / (y[0] * Scalar(2));
  for (int k = 1; k <= n; ++k) {
    Scalar acc = g[k];
    for (int i = 1; i < k; ++i) acc -= y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
    y[static_cast<std::size_t>(k)] = acc * inv2y0;
  }
  Jet x = Jet(std::move(y)).shift_in(half);
  if (polynomial_) {
    // Mark the root as a polynomial when its full square reproduces f.
    const int d = x.degree();
    if (d >= 0 && 2 * d <= order()) {
      std::vector<Scalar> head(x.c_.begin(), x.c_.begin() + d + 1);
      head.resize(static_cast<std::size_t>(2 * d) + 1);
      const Jet big(std::move(head), true);
      const Jet sq = big * big;
      bool same = degree() <= 2 * d;
      for (int i = 0; same && i <= 2 * d; ++i) {
        const Scalar fi = i <= order() ? c_[static_cast<std::size_t>(i)] : Scalar();
        same = (sq[i] - fi).is_zero();
      }
      if (same) x.polynomial_ = true;
    }
  }
  return x;
}

bool Jet::equals_to_order(const Jet& o, int order) const {
  if (order > this->order() || order > o.order()) return false;
  for (int i = 0; i <= order; ++i)
    if (!(c_[static_cast<std::size_t>(i)] - o.c_[static_cast<std::size_t>(i)]).is_zero()) return false;
  return true;
}

bool operator==(const Jet& a, const Jet& b) {
  return a.order() == b.order() && a.equals_to_order(b, a.order());
}

std::string Jet::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << "]";
  if (polynomial_) os << "p";
  return os.str();
}

Jet pow(const Jet& a, int k) {
  Jet r = Jet::constant(Scalar(1), a.order());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace smoothroots

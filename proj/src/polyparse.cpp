#include "smoothroots/polyparse.hpp"

#include <cctype>

#include "smoothroots/error.hpp"

namespace smoothroots {

namespace {

constexpr int kMaxExponent = 1000;

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  BiPoly c;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) c[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  std::erase_if(c, [](const auto& kv) { return sgn(kv.second) == 0; });
  return c;
}

void add_to(BiPoly& a, const BiPoly& b, int sign) {
  for (const auto& [k, v] : b) a[k] += sign * v;
  std::erase_if(a, [](const auto& kv) { return sgn(kv.second) == 0; });
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_ += text[i];
        pos_map_.push_back(i);
      }
  }

  BiPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    BiPoly p = poly();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t at = i_ < pos_map_.size() ? pos_map_[i_] : (pos_map_.empty() ? 0 : pos_map_.back() + 1);
    throw Error(Errc::InputError, "--poly: " + what + " at column " + std::to_string(at + 1));
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
  bool digit() const { return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])); }

  BiPoly poly() {
    BiPoly acc;
    int sign = 1;
    if (peek('+') || peek('-')) sign = s_[i_++] == '-' ? -1 : 1;
    add_to(acc, term(), sign);
    while (peek('+') || peek('-')) {
      sign = s_[i_++] == '-' ? -1 : 1;
      add_to(acc, term(), sign);
    }
    return acc;
  }

  BiPoly term() {
    BiPoly p = factor();
    while (true) {
      if (peek('*')) {
        ++i_;
        p = mul(p, factor());
      } else if (i_ < s_.size() && (digit() || peek('x') || peek('t') || peek('('))) {
        p = mul(p, factor());
      } else {
        return p;
      }
    }
  }

  BiPoly factor() {
    const BiPoly base = atom();
    if (!peek('^')) return base;
    ++i_;
    const long e = integer();
    if (e > kMaxExponent) fail("exponent too large");
    BiPoly r{{{0, 0}, mpq_class(1)}};
    for (long k = 0; k < e; ++k) r = mul(r, base);
    return r;
  }

  BiPoly atom() {
    if (digit()) {
      mpq_class q(integer_str());
      if (peek('/')) {
        ++i_;
        const mpz_class d(integer_str());
        if (d == 0) fail("division by zero");
        q /= d;
      }
      q.canonicalize();
      if (sgn(q) == 0) return {};
      return {{{0, 0}, q}};
    }
    if (peek('x')) { ++i_; return {{{1, 0}, mpq_class(1)}}; }
    if (peek('t')) { ++i_; return {{{0, 1}, mpq_class(1)}}; }
    if (peek('(')) {
      ++i_;
      BiPoly p = poly();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (i_ >= s_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }

  std::string integer_str() {
    if (!digit()) fail("expected an integer");
    const std::size_t b = i_;
    while (digit()) ++i_;
    return s_.substr(b, i_ - b);
  }

  long integer() {
    const std::string d = integer_str();
    if (d.size() > 6) fail("exponent too large");
    return std::stol(d);
  }

  std::string s_;
  std::vector<std::size_t> pos_map_;
  std::size_t i_ = 0;
};

}  // namespace

BiPoly parse_bipoly(const std::string& text) { return Parser(text).parse(); }

PolyCurve parse_poly_curve(const std::string& text, int order) {
  if (order < 0) throw Error(Errc::InputError, "order must be nonnegative");
  const BiPoly p = parse_bipoly(text);
  int n = 0;
  for (const auto& [k, v] : p) n = std::max(n, k.first);
  if (n == 0) throw Error(Errc::InputError, "--poly: no x in the polynomial");
  mpq_class lead = 0;
  for (const auto& [k, v] : p) {
    if (k.first != n) continue;
    if (k.second != 0) throw Error(Errc::InputError, "--poly: leading coefficient in x depends on t");
    lead = v;
  }
  // Ascending t coefficients of each power of x, divided by the leading one.
  std::vector<std::vector<Scalar>> c(static_cast<std::size_t>(n));
  for (const auto& [k, v] : p) {
    if (k.first == n) continue;
    auto& col = c[static_cast<std::size_t>(k.first)];
    if (static_cast<int>(col.size()) <= k.second) col.resize(static_cast<std::size_t>(k.second) + 1, Scalar(0));
    col[static_cast<std::size_t>(k.second)] = Scalar(mpq_class(v / lead));
  }
  std::vector<Jet> a;
  for (int k = 1; k <= n; ++k) {
    // x^n - a_1 x^{n-1} + ...: a_k = (-1)^k c_{n-k}.
    std::vector<Scalar> col = c[static_cast<std::size_t>(n - k)];
    if (col.empty()) col.push_back(Scalar(0));
    if (k % 2 == 1)
      for (auto& x : col) x = -x;
    if (static_cast<int>(col.size()) <= order + 1) {
      a.push_back(Jet::polynomial(col, order));
    } else {
      col.resize(static_cast<std::size_t>(order) + 1);
      a.push_back(Jet(col, false));
    }
  }
  return PolyCurve(std::move(a), order);
}

PolyCoeffs parse_poly_coeffs(const std::string& text) {
  for (const auto& [k, v] : parse_bipoly(text))
    if (k.second != 0) throw Error(Errc::InputError, "--poly: expected a polynomial in x only");
  return parse_poly_curve(text, 0).at_zero();
}

}  // namespace smoothroots

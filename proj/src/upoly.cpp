#include "smoothroots/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "smoothroots/error.hpp"

namespace smoothroots::upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

Scalar eval(const UPoly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) { return add(a, scale(b, Scalar(-1))); }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Scalar& s) {
  UPoly r = a;
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

UPoly derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Scalar(static_cast<long>(i));
  trim(r);
  return r;
}

UPoly monic(const UPoly& p) {
  UPoly q = p;
  trim(q);
  if (q.empty()) return q;
  const Scalar lead = q.back();
  for (auto& c : q) c /= lead;
  q.back() = Scalar(1);
  return q;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly bb = b;
  trim(bb);
  if (bb.empty()) throw Error(Errc::PreconditionViolated, "polynomial division by zero");
  UPoly r = a;
  trim(r);
  const int db = static_cast<int>(bb.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return {UPoly{}, r};
  UPoly q(r.size() - bb.size() + 1);
  const Scalar lead = bb.back();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    const Scalar coef = r[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - db)] = coef;
    if (coef.is_exact_zero()) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= coef * bb[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(k)] = Scalar();
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
  return {q, r};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

bool exact(const UPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.exact(); });
}

bool is_zero(const UPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_zero(); });
}

UPoly from_roots(const std::vector<Scalar>& roots) {
  UPoly p{Scalar(1)};
  for (const auto& r : roots) p = mul(p, UPoly{-r, Scalar(1)});
  return p;
}

std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p0) {
  std::vector<std::pair<UPoly, int>> out;
  const UPoly p = monic(p0);
  if (degree(p) <= 0) return out;
  const UPoly dp = derivative(p);
  UPoly a = gcd(p, dp);
  UPoly b = divmod(p, a).first;
  UPoly c = divmod(dp, a).first;
  UPoly d = sub(c, derivative(b));
  int i = 1;
  while (degree(b) > 0) {
    UPoly f = gcd(b, d);
    if (degree(f) > 0) out.emplace_back(f, i);
    b = divmod(b, f).first;
    c = divmod(d, f).first;
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

namespace {

struct C {
  BigFloat re, im;
};

C cadd(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
C csub(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
C cmul(const C& a, const C& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
C cdiv(const C& a, const C& b) {
  const BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigFloat cabs(const C& a) { return hypot(a.re, a.im); }

std::vector<std::complex<double>> initial_guesses(const UPoly& p) {
  const int n = degree(p);
  std::vector<std::complex<double>> z;
  bool finite = true;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  const std::complex<double> lead = p[static_cast<std::size_t>(n)].to_complex();
  for (int i = 0; i < n; ++i) {
    const std::complex<double> c = p[static_cast<std::size_t>(i)].to_complex() / lead;
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) finite = false;
    comp(0, n - 1 - i) = -c;
    if (i + 1 < n) comp(i + 1, i) = 1.0;
  }
  if (finite) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() == Eigen::Success) {
      for (int i = 0; i < n; ++i) z.push_back(es.eigenvalues()[i]);
    }
  }
  if (static_cast<int>(z.size()) != n || std::any_of(z.begin(), z.end(), [](auto v) {
        return !std::isfinite(v.real()) || !std::isfinite(v.imag());
      })) {
    z.clear();
    double radius = 0;
    for (int i = 0; i < n; ++i)
      radius = std::max(radius, std::abs(p[static_cast<std::size_t>(i)].to_complex() / lead));
    radius = std::isfinite(radius) ? 1 + radius : 1.0;
    for (int k = 0; k < n; ++k)
      z.push_back(std::polar(radius, 2 * M_PI * (k + 0.25) / n));
  }
  // Aberth needs distinct starting points.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (std::abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) <
          1e-8 * (1 + std::abs(z[static_cast<std::size_t>(j)]))) {
        z[static_cast<std::size_t>(i)] +=
            std::polar(1e-4 * (1 + std::abs(z[static_cast<std::size_t>(i)])), 0.7 + i);
        j = -1;
      }
    }
  }
  return z;
}

}  // namespace

std::vector<Scalar> aberth(const UPoly& p0) {
  const UPoly p = monic(p0);
  const int n = degree(p);
  if (n <= 0) return {};
  if (n == 1) return {-p[0]};
  std::vector<C> coef(static_cast<std::size_t>(n) + 1);
  bool real_coeffs = true;
  for (int i = 0; i <= n; ++i) {
    const Scalar& s = p[static_cast<std::size_t>(i)];
    coef[static_cast<std::size_t>(i)] = {s.re().to_float(), s.im().to_float()};
    if (!s.im().is_exact_zero()) real_coeffs = false;
  }
  std::vector<C> dcoef(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    dcoef[static_cast<std::size_t>(i - 1)] = {coef[static_cast<std::size_t>(i)].re * BigFloat(static_cast<long>(i)),
                                              coef[static_cast<std::size_t>(i)].im * BigFloat(static_cast<long>(i))};
  std::vector<C> z;
  for (auto g : initial_guesses(p)) z.push_back({BigFloat(g.real()), BigFloat(g.imag())});

  BigFloat eps;
  mpfr_set_si(eps.get(), 10, MPFR_RNDN);
  mpfr_pow_si(eps.get(), eps.get(), -(BigFloat::digits() - 4), MPFR_RNDN);

  auto horner = [](const std::vector<C>& c, const C& x) {
    C acc{BigFloat(0L), BigFloat(0L)};
    for (std::size_t i = c.size(); i-- > 0;) acc = cadd(cmul(acc, x), c[i]);
    return acc;
  };

  int quiet_rounds = 0;
  for (int iter = 0; iter < 500; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      C& zi = z[static_cast<std::size_t>(i)];
      const C pv = horner(coef, zi);
      if (pv.re.sign() == 0 && pv.im.sign() == 0) continue;
      const C dv = horner(dcoef, zi);
      C sum{BigFloat(0L), BigFloat(0L)};
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const C diff = csub(zi, z[static_cast<std::size_t>(j)]);
        if (diff.re.sign() == 0 && diff.im.sign() == 0) continue;
        sum = cadd(sum, cdiv(C{BigFloat(1L), BigFloat(0L)}, diff));
      }
      C ratio;
      if (dv.re.sign() == 0 && dv.im.sign() == 0) {
        ratio = pv;
      } else {
        ratio = cdiv(pv, dv);
      }
      const C denom = csub(C{BigFloat(1L), BigFloat(0L)}, cmul(ratio, sum));
      C w = (denom.re.sign() == 0 && denom.im.sign() == 0) ? ratio : cdiv(ratio, denom);
      if (w.re.is_nan() || w.im.is_nan()) continue;
      zi = csub(zi, w);
      BigFloat scale = cabs(zi);
      if (scale < BigFloat(1L)) scale = BigFloat(1L);
      if (cabs(w) > eps * scale) converged = false;
    }
    if (converged && ++quiet_rounds >= 2) break;
  }

  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n));
  BigFloat clean;
  mpfr_set_si(clean.get(), 10, MPFR_RNDN);
  mpfr_pow_si(clean.get(), clean.get(), -(BigFloat::digits() * 3) / 4, MPFR_RNDN);
  for (const auto& zi : z) {
    BigFloat scale = cabs(zi);
    if (scale < BigFloat(1L)) scale = BigFloat(1L);
    if (real_coeffs && abs(zi.im) <= clean * scale) {
      out.emplace_back(Real(zi.re));
    } else {
      out.emplace_back(Real(zi.re), Real(zi.im));
    }
  }
  return out;
}

std::vector<Scalar> roots(const UPoly& p0) {
  const UPoly p = monic(p0);
  if (degree(p) <= 0) return {};
  if (!exact(p)) return aberth(p);
  std::vector<Scalar> out;
  for (const auto& [f, mult] : squarefree(p)) {
    std::vector<Scalar> rs;
    if (degree(f) == 1) {
      rs.push_back(-f[0] / f[1]);
    } else {
      rs = aberth(f);
      for (auto& r : rs) {
        const Scalar q = r.rationalized();
        if (q.exact() && eval(f, q).is_exact_zero()) r = q;
      }
    }
    for (const auto& r : rs)
      for (int k = 0; k < mult; ++k) out.push_back(r);
  }
  return out;
}

}  // namespace smoothroots::upoly

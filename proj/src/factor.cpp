#include "smoothroots/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "smoothroots/error.hpp"
#include "smoothroots/linalg.hpp"

namespace smoothroots {

PolyCurve::PolyCurve(std::vector<Jet> a, int order) : a_(std::move(a)) {
  if (order < 0) {
    order = a_.empty() ? 0 : a_.front().order();
    for (const auto& j : a_) order = std::min(order, j.order());
  }
  order_ = order;
  for (auto& j : a_) j = j.order() > order ? j.truncated(order) : j.extended(order);
}

PolyCurve PolyCurve::from_standard(const std::vector<Jet>& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Jet> a;
  for (int k = 1; k <= n; ++k) {
    const Jet& ck = c[static_cast<std::size_t>(n - k)];
    a.push_back(k % 2 == 0 ? ck : -ck);
  }
  int order = n == 0 ? 0 : c.front().order();
  for (const auto& j : c) order = std::min(order, j.order());
  return PolyCurve(std::move(a), order);
}

PolyCurve PolyCurve::constant_in_t(const PolyCoeffs& p, int order) {
  std::vector<Jet> a;
  for (const auto& c : p.a) a.push_back(Jet::constant(c, order));
  return PolyCurve(std::move(a), order);
}

PolyCurve PolyCurve::one(int order) { return PolyCurve({}, order); }

PolyCurve PolyCurve::from_root_jets(const std::vector<Jet>& roots) {
  int order = roots.empty() ? 0 : roots.front().order();
  for (const auto& r : roots) order = std::min(order, r.order());
  PolyCurve p = one(order);
  for (const auto& r : roots) p = p * PolyCurve({r}, order);
  return p;
}

std::vector<Jet> PolyCurve::standard() const {
  const int n = degree();
  std::vector<Jet> c(static_cast<std::size_t>(n) + 1, Jet::zero(order_));
  c[static_cast<std::size_t>(n)] = Jet::constant(Scalar(1), order_);
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(n - k)] = k % 2 == 0 ? a(k) : -a(k);
  return c;
}

PolyCoeffs PolyCurve::at_zero() const {
  std::vector<Scalar> v;
  for (const auto& j : a_) v.push_back(j[0]);
  return PolyCoeffs(std::move(v));
}

PolyCoeffs PolyCurve::at(const Scalar& t) const {
  std::vector<Scalar> v;
  for (const auto& j : a_) v.push_back(j.evaluate(t));
  return PolyCoeffs(std::move(v));
}

Jet PolyCurve::evaluate(const Jet& x) const {
  const auto c = standard();
  Jet acc = c.back();
  for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
  return acc;
}

PolyCurve PolyCurve::truncated(int order) const { return PolyCurve(a_, order); }

bool PolyCurve::exact() const {
  return std::all_of(a_.begin(), a_.end(), [](const Jet& j) { return j.exact(); });
}

bool PolyCurve::is_real() const {
  return std::all_of(a_.begin(), a_.end(), [](const Jet& j) { return j.is_real(); });
}

PolyCurve operator*(const PolyCurve& p, const PolyCurve& q) {
  const int order = std::min(p.order(), q.order());
  const auto a = p.standard(), b = q.standard();
  std::vector<Jet> c(a.size() + b.size() - 1, Jet::zero(order));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  c.pop_back();
  return PolyCurve::from_standard(c).truncated(order);
}

bool PolyCurve::equals_to_order(const PolyCurve& o, int order) const {
  if (degree() != o.degree()) return false;
  for (int k = 1; k <= degree(); ++k)
    if (!a(k).equals_to_order(o.a(k), order)) return false;
  return true;
}

std::string PolyCurve::str() const {
  std::ostringstream os;
  os << "x^" << degree();
  for (int k = 1; k <= degree(); ++k) os << " a" << k << "=" << a(k).str();
  return os.str();
}

PolyCurve substitute_shift(const PolyCurve& p, const Jet& s) {
  const int order = std::min(p.order(), s.order());
  std::vector<Jet> c = p.standard();
  for (auto& j : c) j = j.truncated(order);
  const Jet sh = s.truncated(order);
  const int n = p.degree();
  // Repeated synthetic division by (x - s) yields the Taylor coefficients at s.
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += sh * c[static_cast<std::size_t>(j + 1)];
  c.pop_back();
  return PolyCurve::from_standard(c).truncated(order);
}

double cluster_tolerance(const std::vector<Scalar>& roots, double rel_tol) {
  double scale = 1;
  for (const auto& r : roots) scale = std::max(scale, r.abs_double());
  return rel_tol * scale;
}

std::vector<RootCluster> cluster_roots(const PolyCoeffs& a0, double tol) {
  if (!(tol > 0)) throw Error(Errc::PreconditionViolated, "cluster tolerance must be positive");
  const std::vector<Scalar> rs = a0.roots();
  const int n = static_cast<int>(rs.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = (rs[static_cast<std::size_t>(i)] - rs[static_cast<std::size_t>(j)]).abs_double();
      if (d <= tol) {
        parent[static_cast<std::size_t>(find(i))] = find(j);
      } else if (d < 2 * tol) {
        std::ostringstream os;
        os << "roots at distance " << d << " within (tol, 2 tol) for tol " << tol;
        throw Error(Errc::ClusterAmbiguous, os.str());
      }
    }
  }
  std::vector<RootCluster> clusters;
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (label[static_cast<std::size_t>(r)] < 0) {
      label[static_cast<std::size_t>(r)] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(label[static_cast<std::size_t>(r)])].push_back(rs[static_cast<std::size_t>(i)]);
  }
  auto centroid = [](const RootCluster& c) {
    std::complex<double> s = 0;
    for (const auto& r : c) s += r.to_complex();
    return s / static_cast<double>(c.size());
  };
  std::stable_sort(clusters.begin(), clusters.end(), [&](const RootCluster& x, const RootCluster& y) {
    const auto cx = centroid(x), cy = centroid(y);
    if (cx.real() != cy.real()) return cx.real() < cy.real();
    return cx.imag() < cy.imag();
  });
  return clusters;
}

FactorPair hensel_split(const PolyCurve& p, const RootCluster& first, const RootCluster& second) {
  const int n = p.degree();
  const int dp = static_cast<int>(first.size()), dq = static_cast<int>(second.size());
  if (dp + dq != n || dp == 0 || dq == 0)
    throw Error(Errc::PreconditionViolated, "clusters must partition the roots into two nonempty parts");
  const int order = p.order();
  const std::vector<Jet> pc = p.standard();
  const UPoly p0 = p.at_zero().to_upoly();

  UPoly b0 = upoly::from_roots(first);
  UPoly c0 = upoly::from_roots(second);
  if (upoly::exact(p0)) {
    UPoly br;
    for (const auto& c : b0) br.push_back(c.rationalized());
    if (upoly::exact(br) && static_cast<int>(br.size()) == dp + 1) {
      auto [q, r] = upoly::divmod(p0, br);
      if (r.empty() && static_cast<int>(q.size()) == dq + 1) {
        b0 = br;
        c0 = q;
      }
    }
  }
  b0.resize(static_cast<std::size_t>(dp) + 1);
  c0.resize(static_cast<std::size_t>(dq) + 1);

  // Columns: B_k coefficients (multiplied by C_0), then C_k coefficients (by B_0).
  ScalarMatrix m(n, n);
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dq; ++j)
      if (i + j < n) m(i + j, i) = c0[static_cast<std::size_t>(j)];
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j <= dp; ++j)
      if (i + j < n) m(i + j, dp + i) = b0[static_cast<std::size_t>(j)];
  const ScalarLU lu(m);
  if (lu.singular()) throw Error(Errc::ClustersOverlap, "clusters share a root at t = 0");

  // bs[k][i], cs[k][j]: coefficient of t^k x^i in the first/second factor.
  std::vector<std::vector<Scalar>> bs{std::vector<Scalar>(b0.begin(), b0.begin() + dp)};
  std::vector<std::vector<Scalar>> cs{std::vector<Scalar>(c0.begin(), c0.begin() + dq)};
  for (int k = 1; k <= order; ++k) {
    std::vector<Scalar> rhs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) rhs[static_cast<std::size_t>(j)] = pc[static_cast<std::size_t>(j)][k];
    for (int i = 1; i < k; ++i) {
      const auto& bi = bs[static_cast<std::size_t>(i)];
      const auto& ci = cs[static_cast<std::size_t>(k - i)];
      for (int x = 0; x < dp; ++x) {
        if (bi[static_cast<std::size_t>(x)].is_exact_zero()) continue;
        for (int y = 0; y < dq; ++y)
          rhs[static_cast<std::size_t>(x + y)] -= bi[static_cast<std::size_t>(x)] * ci[static_cast<std::size_t>(y)];
      }
    }
    const std::vector<Scalar> sol = lu.solve(rhs);
    bs.emplace_back(sol.begin(), sol.begin() + dp);
    cs.emplace_back(sol.begin() + dp, sol.end());
  }

  auto assemble = [&](const std::vector<std::vector<Scalar>>& data, int deg) {
    std::vector<Jet> coeffs;
    for (int x = 0; x < deg; ++x) {
      std::vector<Scalar> c;
      for (int k = 0; k <= order; ++k) c.push_back(data[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)]);
      coeffs.emplace_back(std::move(c));
    }
    return PolyCurve::from_standard(coeffs).truncated(order);
  };
  FactorPair out{assemble(bs, dp), assemble(cs, dq)};

  // Factors of a polynomial in t whose t-degrees sum to at most N multiply
  // to P exactly, so they are the factors and carry no tail.
  bool poly_input = true;
  for (const auto& a : p.coeffs()) poly_input = poly_input && a.is_polynomial() && a.exact();
  auto max_degree = [](const PolyCurve& f) {
    int d = 0;
    for (const auto& a : f.coeffs()) d = std::max(d, a.degree());
    return d;
  };
  if (poly_input && out.p1.exact() && out.p2.exact() && max_degree(out.p1) + max_degree(out.p2) <= order) {
    auto mark = [](const PolyCurve& f) {
      std::vector<Jet> a;
      for (const auto& c : f.coeffs()) a.emplace_back(std::vector<Scalar>(c.coeffs().begin(), c.coeffs().end()), true);
      return PolyCurve(std::move(a), f.order());
    };
    out = {mark(out.p1), mark(out.p2)};
  }
  return out;
}

PolyCoeffs horner_deflate(const PolyCoeffs& a, const Scalar& x1, double tol) {
  const UPoly p = a.to_upoly();
  const int n = a.degree();
  if (n < 1) throw Error(Errc::PreconditionViolated, "cannot deflate a constant");
  UPoly q(static_cast<std::size_t>(n));
  Scalar carry = p[static_cast<std::size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = p[static_cast<std::size_t>(k)] + carry * x1;
  }
  // carry now holds P(x1).
  if (a.exact() && x1.exact()) {
    if (!carry.is_exact_zero()) throw Error(Errc::NotARoot, x1.str() + " is not a root, P(x1) = " + carry.str());
  } else {
    double scale = 1;
    for (const auto& c : p) scale = std::max(scale, c.abs_double());
    if (carry.abs_double() > tol * scale)
      throw Error(Errc::NotARoot, x1.str() + " is not a root within tolerance");
  }
  return PolyCoeffs::from_upoly(q);
}

}  // namespace smoothroots

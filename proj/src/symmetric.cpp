#include "smoothroots/symmetric.hpp"

#include "smoothroots/error.hpp"

namespace smoothroots {

PolyCoeffs PolyCoeffs::from_roots(const std::vector<Scalar>& roots) {
  return from_upoly(upoly::from_roots(roots));
}

PolyCoeffs PolyCoeffs::from_upoly(const UPoly& p0) {
  const UPoly p = upoly::monic(p0);
  const int n = upoly::degree(p);
  if (n < 0) throw Error(Errc::InputError, "zero polynomial");
  std::vector<Scalar> a;
  for (int k = 1; k <= n; ++k) {
    const Scalar& c = p[static_cast<std::size_t>(n - k)];
    a.push_back(k % 2 == 0 ? c : -c);
  }
  return PolyCoeffs(std::move(a));
}

UPoly PolyCoeffs::to_upoly() const {
  const int n = degree();
  UPoly p(static_cast<std::size_t>(n) + 1);
  p[static_cast<std::size_t>(n)] = Scalar(1);
  for (int k = 1; k <= n; ++k) {
    const Scalar& ak = a[static_cast<std::size_t>(k - 1)];
    p[static_cast<std::size_t>(n - k)] = k % 2 == 0 ? ak : -ak;
  }
  return p;
}

bool PolyCoeffs::exact() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.exact(); });
}

bool PolyCoeffs::is_real() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_real(); });
}

std::vector<Scalar> newton_from_elementary(const PolyCoeffs& a, int up_to) {
  if (up_to < 0) throw Error(Errc::PreconditionViolated, "negative power-sum index");
  return newton_sums(a.a, up_to, Scalar(1));
}

PolyCoeffs elementary_from_newton(const std::vector<Scalar>& s, int n) {
  if (static_cast<int>(s.size()) < n + 1)
    throw Error(Errc::PreconditionViolated, "need power sums s_0..s_n");
  if (s[0] != Scalar(n)) throw Error(Errc::PreconditionViolated, "s_0 must equal n");
  return PolyCoeffs(elementary_from_sums(s, n, Scalar(1)));
}

SymMatrix<Scalar> bezoutiant(const PolyCoeffs& a) { return bezoutiant_of(a.a, Scalar(1)); }

std::vector<Scalar> delta_minors(const PolyCoeffs& a) {
  const SymMatrix<Scalar> b = bezoutiant(a);
  std::vector<Scalar> d;
  for (int k = 1; k <= a.degree(); ++k) d.push_back(leading_minor(b, k, Scalar(1)));
  return d;
}

std::pair<int, int> inertia(SymMatrix<Scalar> m) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> active(static_cast<std::size_t>(n), true);
  int pos = 0, neg = 0;
  auto at = [&](int i, int j) -> Scalar& { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int remaining = n; remaining > 0;) {
    // Pivot on the largest diagonal entry.
    int piv = -1;
    Real best(0);
    for (int i = 0; i < n; ++i) {
      if (!active[static_cast<std::size_t>(i)] || at(i, i).is_zero()) continue;
      const Real mag = at(i, i).abs();
      if (piv < 0 || mag > best) {
        piv = i;
        best = mag;
      }
    }
    if (piv < 0) {
      // Zero diagonal: fold a row with a nonzero off-diagonal entry into another.
      int pi = -1, pj = -1;
      for (int i = 0; i < n && pi < 0; ++i) {
        if (!active[static_cast<std::size_t>(i)]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (active[static_cast<std::size_t>(j)] && !at(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi < 0) break;  // the remaining block is zero
      // Row/column pi += row/column pj; the new diagonal is 2 m_ij.
      for (int k = 0; k < n; ++k) at(pi, k) += at(pj, k);
      for (int k = 0; k < n; ++k) at(k, pi) += at(k, pj);
      continue;
    }
    const Scalar d = at(piv, piv);
    if (d.re().sign() > 0) ++pos; else ++neg;
    active[static_cast<std::size_t>(piv)] = false;
    --remaining;
    for (int i = 0; i < n; ++i) {
      if (!active[static_cast<std::size_t>(i)] || at(i, piv).is_exact_zero()) continue;
      const Scalar f = at(i, piv) / d;
      for (int j = 0; j < n; ++j) {
        if (!active[static_cast<std::size_t>(j)]) continue;
        at(i, j) -= f * at(piv, j);
      }
    }
    for (int i = 0; i < n; ++i) {
      at(i, piv) = Scalar();
      at(piv, i) = Scalar();
    }
  }
  return {pos, neg};
}

Certificate certify_real_rooted(const PolyCoeffs& a) {
  if (!a.is_real()) throw Error(Errc::PreconditionViolated, "certificate needs real coefficients");
  PolyCoeffs re = a;
  for (auto& c : re.a) c = Scalar(c.re());
  Certificate cert;
  const auto [p, q] = inertia(bezoutiant(re));
  cert.positive = p;
  cert.negative = q;
  cert.rank = p + q;
  cert.signature = p - q;
  cert.all_real = q == 0;
  cert.deltas = delta_minors(re);
  return cert;
}

}  // namespace smoothroots

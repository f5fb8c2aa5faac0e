#pragma once

// Hermitian jet curves U diag(lambda) U^* with known spectral data.

#include <random>
#include <vector>

#include "smoothroots/eigencurve.hpp"

namespace fixtures {

using namespace smoothroots;

// Series of cos and sin of a jet vanishing at 0.
inline std::pair<Jet, Jet> cos_sin(const Jet& th) {
  const int n = th.order();
  Jet c = Jet::constant(Scalar(1), n), s = Jet::zero(n), term = Jet::constant(Scalar(1), n);
  for (int k = 1; k <= n; ++k) {
    term = term * th / Scalar(k);
    if (k % 2 == 1) s += (k % 4 == 1 ? term : -term);
    else c += (k % 4 == 0 ? term : -term);
  }
  return {c, s};
}

inline JetMatrix identity(int n, int order) {
  JetMatrix m(static_cast<std::size_t>(n), JetVector(static_cast<std::size_t>(n), Jet::zero(order)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Jet::constant(Scalar(1), order);
  return m;
}

// Rotation by (c, s) in the (i, j) plane.
inline JetMatrix givens(int n, int i, int j, const Jet& c, const Jet& s) {
  JetMatrix g = identity(n, c.order());
  const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
  g[I][I] = c;
  g[J][J] = c;
  g[I][J] = -s;
  g[J][I] = s;
  return g;
}

struct SpectralCase {
  JetMatrix a;
  std::vector<Jet> lambdas;
  std::vector<JetVector> columns;  // columns[k] is the eigenvector of lambdas[k]
};

inline SpectralCase build(const std::vector<Jet>& lambdas, const JetMatrix& u) {
  const int n = static_cast<int>(lambdas.size());
  JetMatrix d = identity(n, lambdas[0].order());
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = lambdas[static_cast<std::size_t>(i)];
  SpectralCase out;
  out.a = jet_matmul(u, jet_matmul(d, jet_adjoint(u)));
  out.lambdas = lambdas;
  for (int k = 0; k < n; ++k) {
    JetVector col;
    for (int i = 0; i < n; ++i) col.push_back(u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    out.columns.push_back(std::move(col));
  }
  return out;
}

// Random case of size n: polynomial eigenvalues that often agree at 0 and
// sometimes agree identically, and a unitary curve built from a constant
// rational rotation, polynomial-angle rotations and phases.
inline SpectralCase random_case(std::mt19937& rng, int n, int order) {
  std::uniform_int_distribution<int> c0(-1, 1), c(-2, 2), coin(0, 9), plane(0, n - 1);
  std::vector<Jet> lambdas;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && coin(rng) < 3) {
      lambdas.push_back(lambdas.back());
      continue;
    }
    lambdas.push_back(Jet::polynomial({Scalar(c0(rng)), Scalar(c(rng)), Scalar::rational(c(rng), 2)}, order));
  }
  JetMatrix u = identity(n, order);
  const Jet c35 = Jet::constant(Scalar::rational(3, 5), order), s45 = Jet::constant(Scalar::rational(4, 5), order);
  for (int k = 0; k < n; ++k) {
    int i = plane(rng), j = plane(rng);
    if (i == j) continue;
    u = jet_matmul(u, givens(n, i, j, c35, s45));
    const Jet th = Jet::polynomial({Scalar(0), Scalar::rational(c(rng), 2), Scalar(c(rng))}, order);
    const auto [ct, st] = cos_sin(th);
    u = jet_matmul(u, givens(n, i, j, ct, st));
  }
  // Phases e^{i phi_k(t)}.
  for (int k = 0; k < n; ++k) {
    const auto [cp, sp] = cos_sin(Jet::polynomial({Scalar(0), Scalar(c(rng))}, order));
    const Jet ph = cp + sp * Scalar::i();
    for (int r = 0; r < n; ++r) u[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *= ph;
  }
  return build(lambdas, u);
}

// Projector sum v v^* over a set of vectors.
inline JetMatrix projector(const std::vector<JetVector>& vs) {
  const std::size_t n = vs[0].size();
  JetMatrix p(n, JetVector(n, Jet::zero(vs[0][0].order())));
  for (const auto& v : vs)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i][j] += v[i] * v[j].conj();
  return p;
}

// Largest |coefficient| of the entrywise difference, up to `order`.
inline double max_diff(const JetMatrix& a, const JetMatrix& b, int order) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      const Jet d = a[i][j] - b[i][j];
      for (int k = 0; k <= std::min(order, d.order()); ++k) worst = std::max(worst, d[k].abs_double());
    }
  return worst;
}

inline double max_coeff(const Jet& x, int order) {
  double worst = 0;
  for (int k = 0; k <= std::min(order, x.order()); ++k) worst = std::max(worst, x[k].abs_double());
  return worst;
}

}  // namespace fixtures

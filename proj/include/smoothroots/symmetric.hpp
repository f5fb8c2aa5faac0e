#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "smoothroots/number.hpp"
#include "smoothroots/upoly.hpp"

namespace smoothroots {

// Monic polynomial x^n - a_1 x^{n-1} + ... + (-1)^n a_n, stored as a_1..a_n,
// so that a_k is the k-th elementary symmetric function of the roots.
struct PolyCoeffs {
  std::vector<Scalar> a;

  PolyCoeffs() = default;
  explicit PolyCoeffs(std::vector<Scalar> coeffs) : a(std::move(coeffs)) {}
  static PolyCoeffs from_roots(const std::vector<Scalar>& roots);
  static PolyCoeffs from_upoly(const UPoly& p);  // normalizes to monic

  int degree() const { return static_cast<int>(a.size()); }
  // a_k for 1 <= k <= n, with a_0 = 1.
  Scalar operator()(int k) const { return k == 0 ? Scalar(1) : a[static_cast<std::size_t>(k - 1)]; }
  UPoly to_upoly() const;
  bool exact() const;
  bool is_real() const;
  std::vector<Scalar> roots() const { return upoly::roots(to_upoly()); }
};

template <class T>
using SymMatrix = std::vector<std::vector<T>>;

// Power sums s_0..s_up_to from sigma_1..sigma_n. `unit` is the ring's one.
template <class T>
std::vector<T> newton_sums(const std::vector<T>& sigma, int up_to, const T& unit) {
  const int n = static_cast<int>(sigma.size());
  std::vector<T> s;
  s.reserve(static_cast<std::size_t>(up_to) + 1);
  s.push_back(unit * Scalar(n));
  for (int k = 1; k <= up_to; ++k) {
    T acc = unit * Scalar(0);
    for (int j = 1; j <= std::min(k - 1, n); ++j) {
      const T term = sigma[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(k - j)];
      acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    if (k <= n) {
      const T term = sigma[static_cast<std::size_t>(k - 1)] * Scalar(k);
      acc = (k % 2 == 1) ? acc + term : acc - term;
    }
    s.push_back(acc);
  }
  return s;
}

// Inverse of newton_sums: sigma_1..sigma_n from s_0..s_n (s_0 = n).
template <class T>
std::vector<T> elementary_from_sums(const std::vector<T>& s, int n, const T& unit) {
  std::vector<T> sigma;
  sigma.reserve(static_cast<std::size_t>(n));
  auto sig = [&](int k) -> T { return k == 0 ? unit : sigma[static_cast<std::size_t>(k - 1)]; };
  for (int k = 1; k <= n; ++k) {
    T acc = unit * Scalar(0);
    for (int i = 1; i <= k; ++i) {
      const T term = sig(k - i) * s[static_cast<std::size_t>(i)];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    sigma.push_back(acc * (Scalar(1) / Scalar(k)));
  }
  return sigma;
}

// Hankel matrix B_ij = s_{i+j} (0-based) of size n.
template <class T>
SymMatrix<T> bezoutiant_of(const std::vector<T>& sigma, const T& unit) {
  const int n = static_cast<int>(sigma.size());
  const std::vector<T> s = newton_sums(sigma, std::max(0, 2 * n - 2), unit);
  SymMatrix<T> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[static_cast<std::size_t>(i)].push_back(s[static_cast<std::size_t>(i + j)]);
  return b;
}

// Division-free determinant of the leading k x k block (Laplace expansion
// with memoization over column subsets). Suitable for k up to about 14.
template <class T>
T leading_minor(const SymMatrix<T>& m, int k, const T& unit) {
  if (k == 0) return unit;
  std::unordered_map<std::uint32_t, T> memo;
  // det of rows [k - popcount(mask), k) restricted to columns in mask.
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    const int cnt = __builtin_popcount(mask);
    if (cnt == 0) return unit;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int row = k - cnt;
    T acc = unit * Scalar(0);
    int pos = 0;
    for (int c = 0; c < k; ++c) {
      if (!(mask & (1u << c))) continue;
      const T& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
      const T term = entry * self(self, mask & ~(1u << c));
      acc = (pos % 2 == 0) ? acc + term : acc - term;
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (k >= 32) ? 0xffffffffu : ((1u << k) - 1u));
}

std::vector<Scalar> newton_from_elementary(const PolyCoeffs& a, int up_to);
PolyCoeffs elementary_from_newton(const std::vector<Scalar>& s, int n);
SymMatrix<Scalar> bezoutiant(const PolyCoeffs& a);
std::vector<Scalar> delta_minors(const PolyCoeffs& a);

struct Certificate {
  bool all_real = false;
  int rank = 0;
  int signature = 0;  // positive minus negative pivots
  int positive = 0;
  int negative = 0;
  std::vector<Scalar> deltas;
};

// Real-rootedness of a real polynomial via congruence diagonalization of the
// Bezoutiant: all roots real iff no negative pivot.
Certificate certify_real_rooted(const PolyCoeffs& a);

// Inertia (positive, negative) of a symmetric matrix by symmetric pivoting.
std::pair<int, int> inertia(SymMatrix<Scalar> m);

}  // namespace smoothroots

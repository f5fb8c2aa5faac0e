#include "smoothroots/linalg.hpp"

#include <algorithm>

#include "smoothroots/error.hpp"

namespace smoothroots {

ScalarLU::ScalarLU(ScalarMatrix m) : lu_(std::move(m)) {
  const int n = lu_.rows();
  if (lu_.cols() != n) throw Error(Errc::PreconditionViolated, "LU needs a square matrix");
  perm_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
  bool exact = true;
  double max_abs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      exact = exact && lu_(i, j).exact();
      max_abs = std::max(max_abs, lu_(i, j).abs_double());
    }
  const double floor = 1e-30 * max_abs;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    double best = -1;
    for (int i = k; i < n; ++i) {
      if (lu_(i, k).is_zero()) continue;
      if (exact) {
        piv = i;
        break;
      }
      const double mag = lu_(i, k).abs_double();
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    if (piv < 0 || (!exact && best <= floor)) {
      singular_ = true;
      return;
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(piv)]);
    }
    const Scalar inv = Scalar(1) / lu_(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (lu_(i, k).is_exact_zero()) continue;
      const Scalar f = lu_(i, k) * inv;
      lu_(i, k) = f;
      for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

std::vector<Scalar> ScalarLU::solve(std::vector<Scalar> rhs) const {
  if (singular_) throw Error(Errc::PreconditionViolated, "solve with a singular matrix");
  const int n = lu_.rows();
  std::vector<Scalar> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (!lu_(i, j).is_exact_zero()) y[static_cast<std::size_t>(i)] -= lu_(i, j) * y[static_cast<std::size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j)
      if (!lu_(i, j).is_exact_zero()) y[static_cast<std::size_t>(i)] -= lu_(i, j) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] /= lu_(i, i);
  }
  return y;
}

}  // namespace smoothroots

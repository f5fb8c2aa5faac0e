#pragma once

#include <vector>

#include "smoothroots/number.hpp"

namespace smoothroots {

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows * cols)) {}
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return d_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Scalar& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i * cols_ + j)]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> d_;
};

// LU factorization with row pivoting: first nonzero pivot for exact data,
// largest modulus otherwise. Factor once, solve many right-hand sides.
class ScalarLU {
 public:
  explicit ScalarLU(ScalarMatrix m);
  bool singular() const { return singular_; }
  std::vector<Scalar> solve(std::vector<Scalar> rhs) const;

 private:
  ScalarMatrix lu_;
  std::vector<int> perm_;
  bool singular_ = false;
};

}  // namespace smoothroots

#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "smoothroots/factor.hpp"
#include "smoothroots/jet.hpp"
#include "smoothroots/solvecurve.hpp"
#include "smoothroots/track.hpp"

namespace smoothroots {

using JetMatrix = std::vector<std::vector<Jet>>;
using JetVector = std::vector<Jet>;

// Square matrix of complex jets with A_ij = conj(A_ji) to the common order.
class HermitianCurve {
 public:
  HermitianCurve() = default;
  // Polynomial entries are brought to `order` (default: the largest entry
  // order), others truncated to it; the curve keeps the smallest resulting
  // order. Throws HermitianViolation.
  explicit HermitianCurve(JetMatrix entries, int order = -1);
  // Entries given as real and imaginary parts.
  static HermitianCurve from_parts(const JetMatrix& re, const JetMatrix& im);

  int n() const { return static_cast<int>(a_.size()); }
  int order() const { return order_; }
  const Jet& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const JetMatrix& entries() const { return a_; }
  bool exact() const;
  std::vector<std::vector<std::complex<double>>> at(double t) const;

 private:
  JetMatrix a_;
  int order_ = 0;
};

// det(x - A(t)) by Faddeev-LeVerrier. Coefficients are checked real.
PolyCurve char_poly_curve(const HermitianCurve& a);
// Validates hermitian symmetry first.
PolyCurve char_poly_curve(const JetMatrix& a);

struct EigenGroup {
  Jet value;           // the common eigenvalue jet
  int multiplicity = 0;
  bool flat_suspect = false;  // eigenvalues meeting to the truncation order
  std::vector<JetVector> frame;  // orthonormal eigenvector jets
};

struct EigenReport {
  int order = 0;                  // order of the eigenvalue and frame jets
  std::vector<Jet> eigenvalues;   // with repetition, grouped
  std::vector<EigenGroup> groups;
  std::vector<std::string> notes;
  SolveReport solve;

  bool has_flat() const;
};

// Eigenvalue jets from the characteristic polynomial, grouped by generic
// multiplicity (difference zero to order). Flat factors become one
// flat_suspect group whose value is the factor's center.
EigenReport smooth_eigenvalues(const HermitianCurve& a, double cluster_rel_tol = 1e-6);

// Fills the frame of every group. A flat_suspect group gets an orthonormal
// basis of its invariant subspace; A is scalar there to the report's order,
// so these are eigenvectors to that order. Throws RankDrop or FlatRecursion.
EigenReport eigenbundle_frames(const HermitianCurve& a, EigenReport report);

// Jet matrix helpers.
JetMatrix jet_matmul(const JetMatrix& a, const JetMatrix& b);
JetMatrix jet_adjoint(const JetMatrix& a);
JetVector jet_apply(const JetMatrix& a, const JetVector& v);
Jet jet_inner(const JetVector& u, const JetVector& v);  // sum conj(u_k) v_k

// Basis of ker B as jets: pivots chosen on B(0), then kept for every order.
// Throws RankDrop if the kernel does not lift to `dim` vectors.
std::vector<JetVector> frozen_pivot_kernel(const JetMatrix& b, int dim);
std::vector<JetVector> gram_schmidt(const std::vector<JetVector>& vs);

// Grid mode.

using CMatrix = std::vector<std::vector<std::complex<double>>>;

struct EigenGridOptions {
  TrackOptions track;
  double hermitian_tol = 1e-12;  // relative to the largest entry
  // Windows over which the eigenvector angle variation is measured.
  std::vector<std::pair<double, double>> windows;
  double obstruction_threshold = 1.5707963267948966;
  std::vector<std::pair<int, double>> marks;  // for the C^2 check
  double mark_half_width = 0;
};

struct ObstructionReport {
  // Projector angle 2 acos|<v_s, v_{s+1}>| summed over each window, per curve
  // (minimum over curves).
  std::vector<double> window_variation;
  std::vector<double> eigenvector_variation;  // the same with acos|<.,.>|
  bool raised = false;  // every window exceeds the threshold
};

struct EigenGrid {
  RootGrid grid;  // eigenvalues, ascending per sample, plus the arrangement
  // vectors[s][k]: eigenvector of the k-th ascending eigenvalue at sample s.
  std::vector<std::vector<std::vector<std::complex<double>>>> vectors;
  ObstructionReport obstruction;
  GrowthReport second_differences;  // empty unless marks are given
};

EigenGrid eigen_track_grid(const std::vector<double>& ts, const std::vector<CMatrix>& mats,
                           const EigenGridOptions& opts = {});

}  // namespace smoothroots

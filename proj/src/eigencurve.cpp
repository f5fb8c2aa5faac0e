#include "smoothroots/eigencurve.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "smoothroots/error.hpp"

namespace smoothroots {

namespace {

int min_order(const JetMatrix& a) {
  int n = -1;
  for (const auto& row : a)
    for (const auto& x : row) n = n < 0 ? x.order() : std::min(n, x.order());
  return std::max(n, 0);
}

JetMatrix truncate(const JetMatrix& a, int order) {
  JetMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x = x.truncated(std::min(order, x.order()));
  return out;
}

JetMatrix identity_minus(const JetMatrix& a, const Jet& lambda) {
  JetMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i][i] = out[i][i] - lambda;
  return out;
}

Jet trace(const JetMatrix& a) {
  Jet s = Jet::zero(min_order(a));
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

bool float_small(const Scalar& x, double scale) { return x.is_zero() || (!x.exact() && x.abs_double() <= 1e-20 * scale); }

struct Label {
  Jet value;
  int group = 0;
};

void frames_rec(const JetMatrix& a, const std::vector<Label>& labels, const std::vector<JetVector>& basis,
                EigenReport& rep, int depth) {
  const int k = static_cast<int>(a.size());
  if (labels.size() == 1) {
    rep.groups[static_cast<std::size_t>(labels[0].group)].frame = basis;
    return;
  }

  // Labels grouped by their value at t = 0.
  std::vector<std::vector<Label>> clusters;
  for (const auto& l : labels) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const auto& c) { return c[0].value[0] == l.value[0]; });
    if (it == clusters.end()) clusters.push_back({l});
    else it->push_back(l);
  }

  if (clusters.size() == 1) {
    // All eigenvalues agree at 0: A - tr/k vanishes at 0, divide by t.
    if (a.empty() || min_order(a) < 1)
      throw Error(Errc::FlatRecursion, "eigenvalue groups still coincide after dividing by t^" + std::to_string(depth));
    const Jet mean = trace(a) / Scalar(k);
    JetMatrix a1 = identity_minus(a, mean);
    for (auto& row : a1)
      for (auto& x : row) {
        if (!x[0].is_zero()) throw Error(Errc::RankDrop, "eigenvalues coincide at 0 but the matrix is not scalar there");
        x = x.shift_out(1);
      }
    std::vector<Label> l1 = labels;
    for (auto& l : l1) {
      const Jet d = l.value - mean;
      if (d.order() < 1) throw Error(Errc::FlatRecursion, "eigenvalue jets exhausted while groups still coincide");
      l.value = d.shift_out(1);
    }
    frames_rec(a1, l1, basis, rep, depth + 1);
    return;
  }

  for (const auto& c : clusters) {
    JetMatrix b;
    for (const auto& l : c) {
      const JetMatrix f = identity_minus(a, l.value);
      b = b.empty() ? f : jet_matmul(b, f);
    }
    int dim = 0;
    for (const auto& l : c) dim += rep.groups[static_cast<std::size_t>(l.group)].multiplicity;
    const auto v = gram_schmidt(frozen_pivot_kernel(b, dim));
    JetMatrix vm(static_cast<std::size_t>(k), JetVector(static_cast<std::size_t>(dim)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < dim; ++j) vm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    const JetMatrix ac = jet_matmul(jet_adjoint(vm), jet_matmul(a, vm));
    std::vector<JetVector> nb;
    for (const auto& col : v) {
      JetVector w;
      for (std::size_t r = 0; r < basis[0].size(); ++r) {
        Jet s = Jet::zero(col[0].order());
        for (int i = 0; i < k; ++i) s += basis[static_cast<std::size_t>(i)][r] * col[static_cast<std::size_t>(i)];
        w.push_back(s);
      }
      nb.push_back(std::move(w));
    }
    frames_rec(ac, c, nb, rep, depth);
  }
}

}  // namespace

HermitianCurve::HermitianCurve(JetMatrix entries, int order) {
  const std::size_t n = entries.size();
  if (n == 0) throw Error(Errc::InputError, "empty matrix");
  for (const auto& row : entries)
    if (row.size() != n) throw Error(Errc::InputError, "matrix is not square");
  if (order < 0)
    for (const auto& row : entries)
      for (const auto& x : row) order = std::max(order, x.order());
  for (auto& row : entries)
    for (auto& x : row) x = x.is_polynomial() && x.order() < order ? x.extended(order) : x.truncated(std::min(order, x.order()));
  order_ = min_order(entries);
  a_ = truncate(entries, order_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!a_[i][j].equals_to_order(a_[j][i].conj(), order_))
        throw Error(Errc::HermitianViolation, "A[" + std::to_string(i) + "][" + std::to_string(j) +
                                                  "] != conj(A[" + std::to_string(j) + "][" + std::to_string(i) + "])");
}

HermitianCurve HermitianCurve::from_parts(const JetMatrix& re, const JetMatrix& im) {
  JetMatrix a = re;
  if (im.size() != re.size()) throw Error(Errc::InputError, "real and imaginary parts differ in size");
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (im[i].size() != re[i].size()) throw Error(Errc::InputError, "real and imaginary parts differ in size");
    for (std::size_t j = 0; j < re[i].size(); ++j) a[i][j] = re[i][j] + im[i][j] * Scalar::i();
  }
  return HermitianCurve(std::move(a));
}

bool HermitianCurve::exact() const {
  for (const auto& row : a_)
    for (const auto& x : row)
      if (!x.exact()) return false;
  return true;
}

std::vector<std::vector<std::complex<double>>> HermitianCurve::at(double t) const {
  const Scalar ts{BigFloat(t)};
  std::vector<std::vector<std::complex<double>>> m(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i)
    for (const auto& x : a_[i]) m[i].push_back(x.evaluate(ts).to_complex());
  return m;
}

JetMatrix jet_matmul(const JetMatrix& a, const JetMatrix& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  JetMatrix c(n, JetVector(m));
  const int ord = std::min(min_order(a), min_order(b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Jet s = Jet::zero(ord);
      for (std::size_t l = 0; l < k; ++l) s += a[i][l] * b[l][j];
      c[i][j] = s;
    }
  return c;
}

JetMatrix jet_adjoint(const JetMatrix& a) {
  JetMatrix c(a[0].size(), JetVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[j][i] = a[i][j].conj();
  return c;
}

JetVector jet_apply(const JetMatrix& a, const JetVector& v) {
  JetVector out;
  for (const auto& row : a) {
    Jet s = Jet::zero(v[0].order());
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
    out.push_back(s);
  }
  return out;
}

Jet jet_inner(const JetVector& u, const JetVector& v) {
  Jet s = Jet::zero(std::min(u[0].order(), v[0].order()));
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i].conj() * v[i];
  return s;
}

std::vector<JetVector> frozen_pivot_kernel(const JetMatrix& b, int dim) {
  const int n = static_cast<int>(b.size());
  JetMatrix m = b;
  double scale = 1;
  for (const auto& row : b)
    for (const auto& x : row) scale = std::max(scale, x[0].abs_double());

  std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);  // per row
  std::vector<bool> row_used(static_cast<std::size_t>(n), false), col_used(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    // Pivot choice on the order-0 values of the partially reduced matrix.
    int pr = -1, pc = -1;
    double best = 0;
    for (int c = 0; c < n && !(pr >= 0 && m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)][0].exact()); ++c) {
      if (col_used[static_cast<std::size_t>(c)]) continue;
      for (int r = 0; r < n; ++r) {
        if (row_used[static_cast<std::size_t>(r)]) continue;
        const Scalar& x = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)][0];
        if (float_small(x, scale)) continue;
        if (x.exact()) { pr = r; pc = c; break; }
        if (x.abs_double() > best) { best = x.abs_double(); pr = r; pc = c; }
      }
    }
    if (pr < 0) break;
    row_used[static_cast<std::size_t>(pr)] = col_used[static_cast<std::size_t>(pc)] = true;
    pivot_col[static_cast<std::size_t>(pr)] = pc;
    auto& prow = m[static_cast<std::size_t>(pr)];
    const Jet inv = prow[static_cast<std::size_t>(pc)].recip();
    for (auto& x : prow) x = x * inv;
    for (int r = 0; r < n; ++r) {
      if (r == pr) continue;
      auto& row = m[static_cast<std::size_t>(r)];
      const Jet f = row[static_cast<std::size_t>(pc)];
      if (f.exact_zero()) continue;
      for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
  }

  const int rank = static_cast<int>(std::count(row_used.begin(), row_used.end(), true));
  if (n - rank != dim)
    throw Error(Errc::RankDrop, "kernel at t = 0 has dimension " + std::to_string(n - rank) + ", expected " +
                                    std::to_string(dim));
  for (int r = 0; r < n; ++r) {
    if (row_used[static_cast<std::size_t>(r)]) continue;
    for (const auto& x : m[static_cast<std::size_t>(r)])
      for (const auto& c : x.coeffs())
        if (!float_small(c, scale)) throw Error(Errc::RankDrop, "rank of the eliminated matrix grows at higher order");
  }

  const int ord = min_order(m);
  std::vector<JetVector> out;
  for (int f = 0; f < n; ++f) {
    if (col_used[static_cast<std::size_t>(f)]) continue;
    JetVector v(static_cast<std::size_t>(n), Jet::zero(ord));
    v[static_cast<std::size_t>(f)] = Jet::constant(Scalar(1), ord);
    for (int r = 0; r < n; ++r)
      if (row_used[static_cast<std::size_t>(r)])
        v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<JetVector> gram_schmidt(const std::vector<JetVector>& vs) {
  std::vector<JetVector> us;
  for (JetVector v : vs) {
    for (const auto& u : us) {
      const Jet c = jet_inner(u, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= u[i] * c;
    }
    const Jet norm = jet_inner(v, v).real_part().sqrt(Mode::Real).recip();
    for (auto& x : v) x = x * norm;
    us.push_back(std::move(v));
  }
  return us;
}

PolyCurve char_poly_curve(const HermitianCurve& a) {
  // M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const int n = a.n(), ord = a.order();
  const JetMatrix& am = a.entries();
  JetMatrix mk(static_cast<std::size_t>(n), JetVector(static_cast<std::size_t>(n), Jet::zero(ord)));
  Jet c_prev = Jet::constant(Scalar(1), ord);
  std::vector<Jet> std_coeffs(static_cast<std::size_t>(n));  // c_0..c_{n-1}
  for (int k = 1; k <= n; ++k) {
    mk = jet_matmul(am, mk);
    for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c_prev;
    const Jet c = -trace(jet_matmul(am, mk)) / Scalar(k);
    if (!c.imag_part().all_zero()) throw Error(Errc::HermitianViolation, "characteristic polynomial is not real");
    c_prev = c.real_part();
    std_coeffs[static_cast<std::size_t>(n - k)] = c_prev;
  }
  return PolyCurve::from_standard(std_coeffs);
}

PolyCurve char_poly_curve(const JetMatrix& a) { return char_poly_curve(HermitianCurve(a)); }

bool EigenReport::has_flat() const {
  return std::any_of(groups.begin(), groups.end(), [](const EigenGroup& g) { return g.flat_suspect; });
}

EigenReport smooth_eigenvalues(const HermitianCurve& a, double cluster_rel_tol) {
  EigenReport rep;
  SolveOptions opts;
  opts.mode = Mode::Real;
  opts.cluster_rel_tol = cluster_rel_tol;
  rep.solve = solve(char_poly_curve(a), opts);
  if (rep.solve.has_unsolvable())
    throw Error(Errc::PreconditionViolated, "characteristic polynomial has a factor with no smooth roots");

  int ord = a.order();
  for (const auto& r : rep.solve.roots) ord = std::min(ord, r.order());
  std::vector<std::pair<Jet, int>> flats;
  for (const auto& leaf : rep.solve.leaves()) {
    if (leaf.node->kind != NodeKind::Flat) continue;
    const int d = leaf.global.degree();
    const Jet center = leaf.global.a(1) / Scalar(d);
    ord = std::min(ord, center.order());
    flats.emplace_back(center, d);
  }
  rep.order = ord;

  for (const auto& r : rep.solve.roots) {
    const Jet x = r.truncated(ord);
    auto it = std::find_if(rep.groups.begin(), rep.groups.end(),
                           [&](const EigenGroup& g) { return !g.flat_suspect && g.value.equals_to_order(x, ord); });
    if (it == rep.groups.end()) rep.groups.push_back({x, 1, false, {}});
    else ++it->multiplicity;
  }
  for (const auto& [c, d] : flats) {
    rep.groups.push_back({c.truncated(ord), d, true, {}});
    rep.notes.push_back("FlatMeetSuspect: " + std::to_string(d) + " eigenvalues agree to order " + std::to_string(ord) +
                        "; reported as one group at their center");
  }
  for (const auto& g : rep.groups)
    for (int i = 0; i < g.multiplicity; ++i) rep.eigenvalues.push_back(g.value);
  return rep;
}

EigenReport eigenbundle_frames(const HermitianCurve& a, EigenReport rep) {
  const int n = a.n();
  const JetMatrix am = truncate(a.entries(), rep.order);
  std::vector<Label> labels;
  for (std::size_t g = 0; g < rep.groups.size(); ++g)
    labels.push_back({rep.groups[g].value, static_cast<int>(g)});
  std::vector<JetVector> basis;
  for (int i = 0; i < n; ++i) {
    JetVector e(static_cast<std::size_t>(n), Jet::zero(rep.order));
    e[static_cast<std::size_t>(i)] = Jet::constant(Scalar(1), rep.order);
    basis.push_back(std::move(e));
  }
  frames_rec(am, labels, basis, rep, 0);
  int ord = rep.order;
  for (const auto& g : rep.groups)
    for (const auto& v : g.frame)
      for (const auto& x : v) ord = std::min(ord, x.order());
  if (ord < rep.order) {
    rep.notes.push_back("frames known to order " + std::to_string(ord));
    rep.order = ord;
  }
  return rep;
}

EigenGrid eigen_track_grid(const std::vector<double>& ts, const std::vector<CMatrix>& mats,
                           const EigenGridOptions& opts) {
  if (ts.size() != mats.size()) throw Error(Errc::InputError, "one matrix per sample is required");
  EigenGrid out;
  std::vector<std::vector<double>> values;
  for (std::size_t s = 0; s < ts.size(); ++s) {
    const auto& m = mats[s];
    const int n = static_cast<int>(m.size());
    Eigen::MatrixXcd e(n, n);
    double big = 0, asym = 0;
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != n) throw Error(Errc::InputError, "matrix is not square");
      for (int j = 0; j < n; ++j) {
        e(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        big = std::max(big, std::abs(e(i, j)));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) asym = std::max(asym, std::abs(e(i, j) - std::conj(e(j, i))));
    if (asym > opts.hermitian_tol * big)
      throw Error(Errc::NonHermitianSample, "at t = " + std::to_string(ts[s]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::vector<std::vector<std::complex<double>>> vecs;
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXcd col = es.eigenvectors().col(k);
      vecs.emplace_back(col.data(), col.data() + n);
    }
    values.push_back(std::move(ev));
    out.vectors.push_back(std::move(vecs));
  }
  out.grid = differentiable_arrangement(ordered_roots(ts, values), opts.track);

  auto overlap = [](const std::vector<std::complex<double>>& u, const std::vector<std::complex<double>>& v) {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return std::min(1.0, std::abs(s));
  };
  const int deg = out.grid.degree();
  for (const auto& [lo, hi] : opts.windows) {
    double proj = INFINITY, vec = INFINITY;
    for (int c = 0; c < deg; ++c) {
      double p = 0;
      for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
        if (ts[s] < lo || ts[s + 1] > hi) continue;
        const auto& u = out.vectors[s][static_cast<std::size_t>(out.grid.arrangement[s][static_cast<std::size_t>(c)])];
        const auto& v = out.vectors[s + 1][static_cast<std::size_t>(out.grid.arrangement[s + 1][static_cast<std::size_t>(c)])];
        p += std::acos(overlap(u, v));
      }
      proj = std::min(proj, 2 * p);
      vec = std::min(vec, p);
    }
    out.obstruction.window_variation.push_back(proj);
    out.obstruction.eigenvector_variation.push_back(vec);
  }
  out.obstruction.raised =
      !opts.windows.empty() && std::all_of(out.obstruction.window_variation.begin(), out.obstruction.window_variation.end(),
                                           [&](double v) { return v > opts.obstruction_threshold; });
  if (out.obstruction.raised)
    out.grid.notes.push_back("ContinuityObstruction: eigenvector angle variation exceeds " +
                             std::to_string(opts.obstruction_threshold) + " in every window");
  if (!opts.marks.empty())
    out.second_differences = peak_growth(ts, out.grid.arranged(), opts.marks, opts.mark_half_width, 2);
  return out;
}

}  // namespace smoothroots

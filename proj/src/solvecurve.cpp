#include "smoothroots/solvecurve.hpp"

#include <algorithm>

#include "smoothroots/error.hpp"

namespace smoothroots {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Split: return "Split";
    case NodeKind::Deflate: return "Deflate";
    case NodeKind::Smooth: return "Smooth";
    case NodeKind::Flat: return "FlatFactor";
    case NodeKind::Unsolvable: return "UnsolvableFactor";
  }
  return "?";
}

CenterResult reduce_center(const PolyCurve& p) {
  const int n = p.degree();
  if (n == 0) return {p, Jet::zero(p.order())};
  const Jet shift = p.a(1) / Scalar(n);
  PolyCurve c = substitute_shift(p, shift);
  std::vector<Jet> a = c.coeffs();
  a[0] = Jet::zero(c.order());
  return {PolyCurve(std::move(a), c.order()), shift};
}

Weight multiplicity_weight(const PolyCurve& p, Mode mode) {
  const int n = p.degree();
  if (n >= 1 && !p.a(1).all_zero())
    throw Error(Errc::PreconditionViolated, "multiplicity_weight needs a centered curve");
  bool all_flat = true;
  for (int k = 1; k <= n; ++k) all_flat = all_flat && p.a(k).all_zero();
  if (all_flat) return {Weight::Kind::AllFlat, 0};

  if (mode == Mode::Real) {
    const Multiplicity m2 = p.a(2).multiplicity();
    if (m2.flat())
      throw Error(Errc::RealityViolated, "a_2 vanishes to the truncation order but a higher coefficient does not");
    if (m2.value % 2 != 0)
      throw Error(Errc::RealityViolated,
                  "m(a_2) = " + std::to_string(m2.value) + " is odd, so -2n a_2 changes sign");
    const int r = m2.value / 2;
    if (r < 1) return {Weight::Kind::NotWeighted, 0};
    for (int k = 3; k <= n; ++k) {
      if (!p.a(k).multiplicity().at_least(k * r))
        throw Error(Errc::RealityViolated, "m(a_" + std::to_string(k) + ") < " + std::to_string(k) +
                                               " r although m(a_2) = 2r; the roots cannot all be real");
    }
    return {Weight::Kind::Weighted, r};
  }

  int r = 1 << 30;
  for (int k = 2; k <= n; ++k) {
    const Multiplicity m = p.a(k).multiplicity();
    r = std::min(r, m.finite() ? m.value / k : (m.value + 1) / k);
  }
  if (r < 1) return {Weight::Kind::NotWeighted, 0};
  return {Weight::Kind::Weighted, r};
}

PolyCurve deflate_weights(const PolyCurve& p, int r) {
  const int n = p.degree();
  const int order = p.order();
  std::vector<Jet> a;
  int target = order;
  for (int k = 1; k <= n; ++k) {
    a.push_back(p.a(k).shift_out(k * r));
    if (!a.back().is_polynomial()) target = std::min(target, a.back().order());
  }
  return PolyCurve(std::move(a), target);
}

namespace {

bool all_exact_zero(const PolyCurve& p) {
  for (int k = 1; k <= p.degree(); ++k)
    if (!p.a(k).exact_zero()) return false;
  return true;
}

std::pair<RootCluster, RootCluster> choose_partition(const PolyCoeffs& p0, std::vector<RootCluster> clusters,
                                                     bool reverse) {
  if (reverse) std::reverse(clusters.begin(), clusters.end());
  auto split_at = [&](const std::vector<bool>& pick) {
    RootCluster a, b;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (const auto& r : clusters[i]) (pick[i] ? a : b).push_back(r);
    return std::make_pair(a, b);
  };
  if (p0.exact() && clusters.size() > 2) {
    // Prefer factors with exact coefficients: a rational root, then a whole
    // square-free layer.
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      if (clusters[i].front().exact()) {
        std::vector<bool> pick(clusters.size(), false);
        pick[i] = true;
        return split_at(pick);
      }
    }
    for (const auto& [f, mult] : upoly::squarefree(p0.to_upoly())) {
      std::vector<bool> pick(clusters.size(), false);
      int count = 0;
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (static_cast<int>(clusters[i].size()) != mult) continue;
        if (upoly::eval(f, clusters[i].front()).abs_double() < 1e-20) {
          pick[i] = true;
          ++count;
        }
      }
      if (count > 0 && count < static_cast<int>(clusters.size())) return split_at(pick);
    }
  }
  std::vector<bool> pick(clusters.size(), false);
  pick[0] = true;
  return split_at(pick);
}

FactorNode solve_node(const PolyCurve& p, const SolveOptions& opts) {
  FactorNode node;
  node.curve = p;
  const int n = p.degree();
  if (n == 0) return node;
  if (n == 1) {
    node.roots = {p.a(1)};
    return node;
  }
  const PolyCoeffs p0 = p.at_zero();
  const std::vector<Scalar> r0 = p0.roots();
  const double tol = p0.exact() ? cluster_tolerance(r0, 1e-30) : cluster_tolerance(r0, opts.cluster_rel_tol);
  const std::vector<RootCluster> clusters = cluster_roots(p0, tol);

  if (clusters.size() > 1) {
    auto [first, second] = choose_partition(p0, clusters, opts.reverse_clusters);
    const FactorPair pair = hensel_split(p, first, second);
    node.kind = NodeKind::Split;
    node.partition = {first, second};
    node.children.push_back(solve_node(pair.p1, opts));
    node.children.push_back(solve_node(pair.p2, opts));
    node.solved = true;
    for (const auto& c : node.children) {
      node.solved = node.solved && c.solved;
      node.roots.insert(node.roots.end(), c.roots.begin(), c.roots.end());
    }
    return node;
  }

  const CenterResult c = reduce_center(p);
  node.shift = c.shift;
  const Weight w = multiplicity_weight(c.curve, opts.mode);
  switch (w.kind) {
    case Weight::Kind::AllFlat: {
      const bool exact = opts.mode == Mode::Real ? c.curve.a(2).exact_zero() : all_exact_zero(c.curve);
      if (exact) {
        node.kind = NodeKind::Smooth;
        node.roots.assign(static_cast<std::size_t>(n), c.shift);
      } else {
        node.kind = NodeKind::Flat;
        node.solved = false;
        node.reason = "all centered coefficients vanish to order " + std::to_string(c.curve.order());
      }
      return node;
    }
    case Weight::Kind::NotWeighted:
      node.kind = NodeKind::Unsolvable;
      node.solved = false;
      node.reason = "no weight r >= 1 with m(a_k) >= k r for all k";
      return node;
    case Weight::Kind::Weighted:
      break;
  }
  const PolyCurve pr = deflate_weights(c.curve, w.r);
  if (pr.order() < n)
    throw Error(Errc::TruncationExhausted, "after dividing by t^" + std::to_string(w.r) +
                                               " only order " + std::to_string(pr.order()) +
                                               " remains for degree " + std::to_string(n));
  node.kind = NodeKind::Deflate;
  node.weight = w.r;
  node.children.push_back(solve_node(pr, opts));
  node.solved = node.children[0].solved;
  for (const auto& y : node.children[0].roots) {
    const Jet ty = y.shift_in(w.r);
    node.roots.push_back(c.shift.truncated(std::min(c.shift.order(), ty.order())) + ty);
  }
  return node;
}

PolyCurve unweight(const PolyCurve& q, int r) {
  std::vector<Jet> a;
  for (int k = 1; k <= q.degree(); ++k) a.push_back(q.a(k).shift_in(k * r));
  int order = q.order() + r;
  for (const auto& j : a)
    if (!j.is_polynomial()) order = std::min(order, j.order());
  return PolyCurve(std::move(a), order);
}

void collect_leaves(const FactorNode& node, std::vector<ProvenanceStep>& path, std::vector<LeafFactor>& out) {
  switch (node.kind) {
    case NodeKind::Split:
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        ProvenanceStep s{ProvenanceStep::Kind::Split, node.partition, static_cast<int>(i), Jet::zero(0), 0};
        path.push_back(s);
        collect_leaves(node.children[i], path, out);
        path.pop_back();
      }
      return;
    case NodeKind::Deflate:
      path.push_back({ProvenanceStep::Kind::Center, {}, 0, node.shift, 0});
      path.push_back({ProvenanceStep::Kind::Deflate, {}, 0, Jet::zero(0), node.weight});
      collect_leaves(node.children[0], path, out);
      path.pop_back();
      path.pop_back();
      return;
    default:
      out.push_back({&node, path, map_to_input(node.curve, path)});
  }
}

}  // namespace

PolyCurve map_to_input(const PolyCurve& leaf, const std::vector<ProvenanceStep>& provenance) {
  PolyCurve q = leaf;
  for (auto it = provenance.rbegin(); it != provenance.rend(); ++it) {
    switch (it->kind) {
      case ProvenanceStep::Kind::Deflate:
        q = unweight(q, it->weight);
        break;
      case ProvenanceStep::Kind::Center:
        q = substitute_shift(q, -it->shift);
        break;
      case ProvenanceStep::Kind::Split:
        break;
    }
  }
  return q;
}

std::vector<LeafFactor> SolveReport::leaves() const {
  std::vector<LeafFactor> out;
  std::vector<ProvenanceStep> path;
  collect_leaves(tree, path, out);
  return out;
}

PolyCurve SolveReport::reconstruct() const { return smooth_part * flat_part * unsolvable_part; }

SolveReport solve(const PolyCurve& p, const SolveOptions& opts) {
  if (opts.mode == Mode::Real) {
    if (!p.is_real()) throw Error(Errc::PreconditionViolated, "real mode needs real coefficient jets");
    if (p.degree() > 0 && !certify_real_rooted(p.at_zero()).all_real)
      throw Error(Errc::RealityViolated, "P(0) has non-real roots");
  }
  SolveReport rep;
  rep.mode = opts.mode;
  rep.input = p;
  rep.tree = solve_node(p, opts);
  rep.roots = rep.tree.roots;
  rep.smooth_part = PolyCurve::one(p.order());
  rep.flat_part = PolyCurve::one(p.order());
  rep.unsolvable_part = PolyCurve::one(p.order());
  for (const auto& leaf : rep.leaves()) {
    switch (leaf.node->kind) {
      case NodeKind::Smooth: rep.smooth_part = rep.smooth_part * leaf.global; break;
      case NodeKind::Flat: rep.flat_part = rep.flat_part * leaf.global; break;
      case NodeKind::Unsolvable: rep.unsolvable_part = rep.unsolvable_part * leaf.global; break;
      default: break;
    }
  }
  return rep;
}

std::vector<Jet> delta_minor_jets(const PolyCurve& p) {
  const Jet unit = Jet::constant(Scalar(1), p.order());
  const SymMatrix<Jet> b = bezoutiant_of(p.coeffs(), unit);
  std::vector<Jet> out;
  for (int k = 1; k <= p.degree(); ++k) out.push_back(leading_minor(b, k, unit));
  return out;
}

MinorCondition top_minor_condition(const PolyCurve& p) {
  const std::vector<Jet> d = delta_minor_jets(p);
  MinorCondition r;
  r.delta = Jet::zero(p.order());
  r.delta_multiplicity = Multiplicity::flat_to_order(p.order());
  for (int k = static_cast<int>(d.size()); k >= 1; --k) {
    if (!d[static_cast<std::size_t>(k - 1)].exact_zero()) {
      r.k = k;
      r.delta = d[static_cast<std::size_t>(k - 1)];
      r.delta_multiplicity = r.delta.multiplicity();
      return r;
    }
  }
  return r;
}

bool check_curve(const PolyCurve& p, const std::vector<Scalar>& samples) {
  for (const auto& t : samples)
    if (!certify_real_rooted(p.at(t)).all_real) return false;
  return true;
}

}  // namespace smoothroots

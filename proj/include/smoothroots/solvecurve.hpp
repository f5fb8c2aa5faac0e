#pragma once

#include <string>
#include <vector>

#include "smoothroots/factor.hpp"
#include "smoothroots/jet.hpp"

namespace smoothroots {

struct CenterResult {
  PolyCurve curve;  // a_1 = 0
  Jet shift;        // a_1 / n
};

// y = x - a_1/n.
CenterResult reduce_center(const PolyCurve& p);

struct Weight {
  enum class Kind { Weighted, NotWeighted, AllFlat };
  Kind kind = Kind::NotWeighted;
  int r = 0;
};

// Largest r with m(a_k) >= k r for all k, on a centered curve.
// Real mode reads r off a_2 alone and rejects odd m(a_2).
Weight multiplicity_weight(const PolyCurve& p, Mode mode);

// Coefficient k becomes a_k / t^{kr}. Polynomial coefficients keep the input
// order; otherwise the common order drops to N - n r.
PolyCurve deflate_weights(const PolyCurve& p, int r);

enum class NodeKind { Split, Deflate, Smooth, Flat, Unsolvable };
const char* node_kind_name(NodeKind k);

struct FactorNode {
  NodeKind kind = NodeKind::Smooth;
  PolyCurve curve;  // in the local coordinates of this node
  // Split: the clusters of curve(0) that seed the two children.
  std::vector<RootCluster> partition;
  // Deflate: child roots y relate to ours by x = shift + t^weight y.
  Jet shift;
  int weight = 0;
  std::string reason;     // Flat / Unsolvable
  std::vector<Jet> roots; // smooth roots found in this subtree, local coordinates
  bool solved = true;     // every leaf below is Smooth
  std::vector<FactorNode> children;
};

struct SolveOptions {
  Mode mode = Mode::Real;
  double cluster_rel_tol = 1e-6;
  // Take root clusters in reverse order when choosing splits.
  bool reverse_clusters = false;
};

struct ProvenanceStep {
  enum class Kind { Split, Center, Deflate };
  Kind kind;
  std::vector<RootCluster> partition;  // Split
  int branch = 0;                      // Split: child index taken
  Jet shift;                           // Center
  int weight = 0;                      // Deflate
};

struct LeafFactor {
  const FactorNode* node = nullptr;
  std::vector<ProvenanceStep> provenance;
  PolyCurve global;  // the leaf mapped back to the input coordinates
};

struct SolveReport {
  Mode mode = Mode::Real;
  PolyCurve input;
  FactorNode tree;
  std::vector<Jet> roots;     // smooth roots in input coordinates
  PolyCurve smooth_part;      // P^(s)
  PolyCurve flat_part;        // P^(inf)
  PolyCurve unsolvable_part;  // P^(n)

  bool solvable() const { return tree.solved; }
  bool has_flat() const { return flat_part.degree() > 0; }
  bool has_unsolvable() const { return unsolvable_part.degree() > 0; }
  std::vector<LeafFactor> leaves() const;
  // P^(s) P^(inf) P^(n), to the order at which it is known.
  PolyCurve reconstruct() const;
};

SolveReport solve(const PolyCurve& p, const SolveOptions& opts = {});

// Leaf polycurve mapped to the input coordinates along its provenance.
PolyCurve map_to_input(const PolyCurve& leaf, const std::vector<ProvenanceStep>& provenance);

struct MinorCondition {
  int k = 0;
  Jet delta;  // the k-th Bezoutiant minor as a jet
  Multiplicity delta_multiplicity;
};

std::vector<Jet> delta_minor_jets(const PolyCurve& p);
// Maximal k whose minor is not identically zero, with its order at t = 0.
MinorCondition top_minor_condition(const PolyCurve& p);

// True iff the coefficients at every sample t are real-rooted.
bool check_curve(const PolyCurve& p, const std::vector<Scalar>& samples);

}  // namespace smoothroots

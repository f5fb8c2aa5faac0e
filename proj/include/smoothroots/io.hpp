#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "smoothroots/corpus.hpp"
#include "smoothroots/eigencurve.hpp"
#include "smoothroots/solvecurve.hpp"
#include "smoothroots/symmetric.hpp"
#include "smoothroots/track.hpp"

namespace smoothroots::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

// Exact values are written as "p/q" strings, floats in scientific notation;
// complex values as {"re": ..., "im": ...}.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json to_json(const Jet& x);
Jet jet_from_json(const Json& j);

Json to_json(const PolyCurve& p);
PolyCurve polycurve_from_json(const Json& j);

Json to_json(const Certificate& c);
Json to_json(const SolveReport& r);
Json to_json(const EigenReport& r);
Json to_json(const RootGrid& g);
Json meets_json(const RootGrid& g, const TrackOptions& opts);
Json to_json(const EigenGrid& g, const TrackOptions& opts);

// Header t, x_1..x_n, sigma. Complex grids split x_k into x_k_re, x_k_im.
std::string grid_csv(const RootGrid& g);

// Rows (t, a_1..a_n); a header row is skipped.
corpus::SampledPoly read_sampled_csv(std::istream& in);

struct FamilySpec {
  enum class Kind { PolyJet, PolySampled, HermitianJet, HermitianSampled, Corpus };
  Kind kind = Kind::PolyJet;

  // options
  int order = kDefaultOrder;
  Mode mode = Mode::Real;
  double tol = 1e-6;
  std::string grid;  // "a:b:steps", empty if none

  PolyCurve poly;
  corpus::SampledPoly sampled;
  HermitianCurve hermitian;
  corpus::SampledHermitian hsampled;
  std::string corpus_name;
  corpus::CorpusParams params;
  Json metadata;  // carried through unchanged
};

const char* kind_name(FamilySpec::Kind k);

Json to_json(const FamilySpec& f);
// Throws InputError on malformed specs.
FamilySpec family_from_json(const Json& j);
// Sampled spec for a corpus entry, with its description and references as metadata.
FamilySpec family_from_corpus(const corpus::CorpusEntry& e);
// Resolves a Corpus kind into the sampled spec it names; other kinds pass through.
FamilySpec resolve(const FamilySpec& f);

std::string dump(const Json& j);  // two-space indent plus trailing newline

}  // namespace smoothroots::io

// smoothroots: certify, solve, track, eigen and corpus commands.
//
// Exit codes: 0 ok, 1 certificate failure (not all real, RealityViolated,
// NotRealRooted), 2 unsolvable factor, 3 input error or TruncationExhausted.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "smoothroots/corpus.hpp"
#include "smoothroots/eigencurve.hpp"
#include "smoothroots/error.hpp"
#include "smoothroots/io.hpp"
#include "smoothroots/polyparse.hpp"
#include "smoothroots/solvecurve.hpp"
#include "smoothroots/track.hpp"

using namespace smoothroots;
namespace fs = std::filesystem;
using io::FamilySpec;
using io::Json;

namespace {

struct Options {
  int order = kDefaultOrder;
  std::string mode = "real";
  double tol = 1e-6;
  std::string grid;
  std::string out;
  std::string format = "json";
  std::string poly;
  std::string input;
  std::string corpus;
  // corpus parameters
  int n_min = 1;
  int n_max = 6;
  double step = 1e-5;
  int window = 100;
  // set when given on the command line; spec files keep their own otherwise
  bool order_given = false;
  bool mode_given = false;
  bool tol_given = false;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::RealityViolated:
    case Errc::NotRealRooted:
    case Errc::NegativeValue: return 1;
    default: return 3;
  }
}

Mode parse_mode(const std::string& m) {
  if (m == "real") return Mode::Real;
  if (m == "complex") return Mode::Complex;
  throw Error(Errc::InputError, "--mode must be real or complex");
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(Errc::InputError, "cannot write " + p.string());
  f << text;
}

// Writes to --out/<name> when --out is set, to stdout otherwise.
void emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(o.out);
  write_file(fs::path(o.out) / name, text);
}

corpus::CorpusParams corpus_params(const Options& o) {
  corpus::CorpusParams p;
  p.n_min = o.n_min;
  p.n_max = o.n_max;
  p.step = o.step;
  p.half_window = o.window;
  return p;
}

// The family named by --input, --corpus or --poly, with command-line options applied.
FamilySpec load_family(const Options& o) {
  const int given = !o.input.empty() + !o.corpus.empty() + !o.poly.empty();
  if (given != 1) throw Error(Errc::InputError, "give exactly one of --input, --corpus, --poly");
  FamilySpec f;
  if (!o.input.empty()) {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw Error(Errc::InputError, "cannot read " + o.input);
    if (o.input.size() > 4 && o.input.substr(o.input.size() - 4) == ".csv") {
      f.kind = FamilySpec::Kind::PolySampled;
      f.sampled = io::read_sampled_csv(in);
    } else {
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::InputError, std::string("not JSON: ") + e.what());
      }
      f = io::family_from_json(j);
    }
  } else if (!o.corpus.empty()) {
    f.kind = FamilySpec::Kind::Corpus;
    f.corpus_name = o.corpus;
    f.params = corpus_params(o);
  } else {
    f.kind = FamilySpec::Kind::PolyJet;
    f.poly = parse_poly_curve(o.poly, o.order);
  }
  if (o.order_given || o.input.empty()) f.order = o.order;
  if (o.mode_given || o.input.empty()) f.mode = parse_mode(o.mode);
  if (o.tol_given || o.input.empty()) f.tol = o.tol;
  if (!o.grid.empty()) f.grid = o.grid;
  return io::resolve(f);
}

PolyCurve jet_input(const FamilySpec& f) {
  if (f.kind != FamilySpec::Kind::PolyJet) throw Error(Errc::InputError, "expected a poly-jet family");
  const PolyCurve& p = f.poly;
  return f.order < p.order() ? p.truncated(f.order) : p;
}

int cmd_certify(const Options& o) {
  PolyCoeffs p;
  if (!o.poly.empty() && o.input.empty()) {
    p = parse_poly_coeffs(o.poly);
  } else {
    p = jet_input(load_family(o)).at_zero();
  }
  const Certificate c = certify_real_rooted(p);
  emit(o, "certificate.json", io::dump(io::to_json(c)));
  return c.all_real ? 0 : 1;
}

int cmd_solve(const Options& o) {
  const FamilySpec f = load_family(o);
  SolveOptions so;
  so.mode = f.mode;
  so.cluster_rel_tol = f.tol;
  const SolveReport r = solve(jet_input(f), so);
  emit(o, "solve.json", io::dump(io::to_json(r)));
  return r.has_unsolvable() ? 2 : 0;
}

std::vector<std::pair<int, double>> marks_of(const FamilySpec& f) {
  std::vector<std::pair<int, double>> marks;
  if (f.metadata.is_object() && f.metadata.contains("marks"))
    for (const auto& m : f.metadata.at("marks")) marks.emplace_back(m.at("n").get<int>(), m.at("t").get<double>());
  return marks;
}

double mark_half_width(const FamilySpec& f) {
  if (f.metadata.is_object() && f.metadata.contains("params"))
    return 20 * f.metadata.at("params").value("step", 1e-5);
  return 0;
}

Json growth_json(const GrowthReport& g) {
  Json j;
  j["peaks"] = g.peaks;
  j["monotone"] = g.monotone;
  j["exponent"] = g.exponent;
  j["blowup"] = g.blowup;
  return j;
}

int cmd_track(const Options& o) {
  const FamilySpec f = load_family(o);
  std::vector<CurveSample> samples;
  if (f.kind == FamilySpec::Kind::PolySampled) {
    for (std::size_t s = 0; s < f.sampled.ts.size(); ++s) {
      PolyCoeffs p;
      for (double a : f.sampled.a[s]) p.a.emplace_back(BigFloat(a));
      samples.push_back({Scalar(BigFloat(f.sampled.ts[s])), p});
    }
  } else if (f.kind == FamilySpec::Kind::PolyJet) {
    if (f.grid.empty()) throw Error(Errc::InputError, "track on a jet family needs --grid");
    samples = sample_curve(jet_input(f), parse_grid(f.grid));
  } else {
    throw Error(Errc::InputError, "track needs a polynomial family");
  }
  TrackOptions to;
  RootGrid g = f.mode == Mode::Real ? differentiable_arrangement(ordered_roots(samples, to), to) : matched_roots(samples);

  Json meets = io::meets_json(g, to);
  const auto marks = marks_of(f);
  if (!marks.empty() && f.mode == Mode::Real)
    meets["second_differences"] = growth_json(peak_growth(g.ts, g.arranged(), marks, mark_half_width(f), 2));
  if (o.format == "csv") {
    emit(o, "track.csv", io::grid_csv(g));
    if (!o.out.empty()) emit(o, "meets.json", io::dump(meets));
  } else {
    Json j;
    j["schema"] = io::kSchema;
    j["grid"] = io::to_json(g);
    j["meets"] = meets;
    emit(o, "track.json", io::dump(j));
  }
  return 0;
}

int cmd_eigen(const Options& o) {
  const FamilySpec f = load_family(o);
  if (f.kind == FamilySpec::Kind::HermitianJet) {
    const HermitianCurve a(f.hermitian.entries(), f.order);
    const EigenReport r = eigenbundle_frames(a, smooth_eigenvalues(a, f.tol));
    emit(o, "eigen.json", io::dump(io::to_json(r)));
    return 0;
  }
  if (f.kind != FamilySpec::Kind::HermitianSampled) throw Error(Errc::InputError, "eigen needs a hermitian family");
  EigenGridOptions eo;
  eo.marks = marks_of(f);
  eo.mark_half_width = mark_half_width(f);
  if (f.metadata.is_object() && f.metadata.contains("windows"))
    for (const auto& w : f.metadata.at("windows")) eo.windows.emplace_back(w.at(0).get<double>(), w.at(1).get<double>());
  const EigenGrid g = eigen_track_grid(f.hsampled.ts, f.hsampled.a, eo);
  if (o.format == "csv") {
    emit(o, "eigen.csv", io::grid_csv(g.grid));
    if (!o.out.empty()) emit(o, "eigen.json", io::dump(io::to_json(g, eo.track)));
  } else {
    emit(o, "eigen.json", io::dump(io::to_json(g, eo.track)));
  }
  return 0;
}

int cmd_corpus(const Options& o, const std::string& name) {
  const FamilySpec f = io::family_from_corpus(corpus::make(name, corpus_params(o)));
  emit(o, name + ".json", io::dump(io::to_json(f)));
  return 0;
}

void add_common(CLI::App* c, Options& o) {
  c->add_option("--order", o.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  c->add_option("--mode", o.mode, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  c->add_option("--tol", o.tol, "Relative clustering tolerance");
  c->add_option("--grid", o.grid, "Sample grid a:b:steps");
  c->add_option("--out", o.out, "Output directory");
  c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  c->add_option("--poly", o.poly, "Polynomial in x and t, e.g. \"x^2 - t^4\"");
  c->add_option("--input", o.input, "Family spec (JSON) or samples (CSV)");
  c->add_option("--corpus", o.corpus, "Named corpus entry");
  c->add_option("--n-min", o.n_min, "Corpus: first marked point");
  c->add_option("--n-max", o.n_max, "Corpus: last marked point");
  c->add_option("--step", o.step, "Corpus: grid step near marked points");
  c->add_option("--window", o.window, "Corpus: samples on each side of a marked point");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth choices of roots and eigenvalues for curves of polynomials and hermitian matrices"};
  app.require_subcommand(1);
  Options o;
  std::string corpus_name;
  auto* certify = app.add_subcommand("certify", "Real-rootedness certificate of a polynomial");
  auto* solve_cmd = app.add_subcommand("solve", "Smooth root jets and factor tree of a polynomial curve");
  auto* track = app.add_subcommand("track", "Root curves on a sample grid");
  auto* eigen = app.add_subcommand("eigen", "Eigenvalue and eigenvector jets, or eigen curves on a grid");
  auto* corp = app.add_subcommand("corpus", "Emit a corpus family with reference values");
  for (auto* c : {certify, solve_cmd, track, eigen, corp}) add_common(c, o);
  corp->add_option("name", corpus_name, "Entry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  for (auto* c : {certify, solve_cmd, track, eigen, corp}) {
    if (!c->parsed()) continue;
    o.order_given = c->get_option("--order")->count() > 0;
    o.mode_given = c->get_option("--mode")->count() > 0;
    o.tol_given = c->get_option("--tol")->count() > 0;
  }

  try {
    if (certify->parsed()) return cmd_certify(o);
    if (solve_cmd->parsed()) return cmd_solve(o);
    if (track->parsed()) return cmd_track(o);
    if (eigen->parsed()) return cmd_eigen(o);
    if (corp->parsed()) return cmd_corpus(o, corpus_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

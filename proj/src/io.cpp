#include "smoothroots/io.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include "smoothroots/error.hpp"

namespace smoothroots::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InputError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Real real_from_string(const std::string& s) {
  const Real r = Real::parse(s);
  // Floats are written in scientific notation; rationals never contain 'e'.
  return s.find_first_of("eE.") != std::string::npos ? Real(r.to_float()) : r;
}

Json real_json(const Real& r) { return r.str(); }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json node_json(const FactorNode& n) {
  Json j;
  j["kind"] = node_kind_name(n.kind);
  j["curve"] = to_json(n.curve);
  if (n.kind == NodeKind::Split) {
    Json parts = Json::array();
    for (const auto& c : n.partition) {
      Json roots = Json::array();
      for (const auto& x : c) roots.push_back(to_json(x));
      parts.push_back(roots);
    }
    j["partition"] = parts;
  }
  if (n.kind == NodeKind::Deflate) {
    j["shift"] = to_json(n.shift);
    j["weight"] = n.weight;
  }
  if (!n.reason.empty()) j["reason"] = n.reason;
  Json roots = Json::array();
  for (const auto& r : n.roots) roots.push_back(to_json(r));
  j["roots"] = roots;
  j["solved"] = n.solved;
  if (!n.children.empty()) {
    Json ch = Json::array();
    for (const auto& c : n.children) ch.push_back(node_json(c));
    j["children"] = ch;
  }
  return j;
}

Json matrix_json(const CMatrix& m, bool imag) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(imag ? z.imag() : z.real());
    out.push_back(r);
  }
  return out;
}

std::vector<double> doubles(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<double> v;
  for (const auto& x : j) {
    if (!x.is_number()) bad(std::string(what) + " must hold numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

void check_increasing(const std::vector<double>& ts) {
  for (std::size_t k = 1; k < ts.size(); ++k)
    if (!(ts[k] > ts[k - 1])) bad("sample grid must be strictly increasing");
}

Json params_json(const corpus::CorpusParams& p) {
  Json j;
  j["n_min"] = p.n_min;
  j["n_max"] = p.n_max;
  j["step"] = p.step;
  j["half_window"] = p.half_window;
  if (!p.grid.empty()) j["grid"] = p.grid;
  return j;
}

corpus::CorpusParams params_from_json(const Json& j) {
  corpus::CorpusParams p;
  if (j.is_null()) return p;
  if (j.contains("n_min")) p.n_min = j.at("n_min").get<int>();
  if (j.contains("n_max")) p.n_max = j.at("n_max").get<int>();
  if (j.contains("step")) p.step = j.at("step").get<double>();
  if (j.contains("half_window")) p.half_window = j.at("half_window").get<int>();
  if (j.contains("grid")) p.grid = doubles(j.at("grid"), "grid");
  return p;
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Scalar& x) {
  if (x.im().is_exact_zero()) return real_json(x.re());
  Json j;
  j["re"] = real_json(x.re());
  j["im"] = real_json(x.im());
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(real_from_string(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Real(j.get<long>()));
  if (j.is_number()) return Scalar(BigFloat(j.get<double>()));
  if (j.is_object()) {
    const Json& re = field(j, "re");
    const Json& im = field(j, "im");
    return Scalar(scalar_from_json(re).re(), scalar_from_json(im).re());
  }
  bad("bad number " + j.dump());
}

Json to_json(const Jet& x) {
  Json j;
  j["order"] = x.order();
  j["polynomial"] = x.is_polynomial();
  Json c = Json::array();
  for (const auto& s : x.coeffs()) c.push_back(to_json(s));
  j["coeffs"] = c;
  return j;
}

Jet jet_from_json(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array() || c.empty()) bad("jet coefficients must be a nonempty array");
  std::vector<Scalar> v;
  for (const auto& x : c) v.push_back(scalar_from_json(x));
  // A bare coefficient list is a polynomial.
  const bool polynomial = j.contains("polynomial") ? j.at("polynomial").get<bool>() : !j.contains("order");
  const int order = j.contains("order") ? j.at("order").get<int>() : static_cast<int>(v.size()) - 1;
  if (order < 0) bad("negative jet order");
  if (static_cast<int>(v.size()) > order + 1) {
    for (std::size_t k = static_cast<std::size_t>(order) + 1; k < v.size(); ++k)
      if (polynomial && !v[k].is_zero()) bad("polynomial jet has terms past its order");
    v.resize(static_cast<std::size_t>(order) + 1);
  }
  if (static_cast<int>(v.size()) < order + 1) {
    if (!polynomial) bad("jet lists fewer coefficients than its order");
    v.resize(static_cast<std::size_t>(order) + 1, Scalar(0));
  }
  return Jet(std::move(v), polynomial);
}

Json to_json(const PolyCurve& p) {
  Json j;
  j["degree"] = p.degree();
  j["order"] = p.order();
  Json a = Json::array();
  for (const auto& x : p.coeffs()) a.push_back(to_json(x));
  j["a"] = a;
  return j;
}

PolyCurve polycurve_from_json(const Json& j) {
  const Json& a = field(j, "a");
  if (!a.is_array()) bad("'a' must be an array of jets");
  std::vector<Jet> v;
  for (const auto& x : a) v.push_back(jet_from_json(x));
  return PolyCurve(std::move(v), j.contains("order") ? j.at("order").get<int>() : -1);
}

Json to_json(const Certificate& c) {
  Json j;
  j["schema"] = kSchema;
  j["all_real"] = c.all_real;
  j["rank"] = c.rank;
  j["signature"] = c.signature;
  j["positive"] = c.positive;
  j["negative"] = c.negative;
  Json d = Json::array();
  for (const auto& x : c.deltas) d.push_back(to_json(x));
  j["deltas"] = d;
  return j;
}

Json to_json(const SolveReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["mode"] = r.mode == Mode::Real ? "real" : "complex";
  j["input"] = to_json(r.input);
  j["solvable"] = r.solvable();
  j["has_flat"] = r.has_flat();
  j["has_unsolvable"] = r.has_unsolvable();
  Json roots = Json::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  j["roots"] = roots;
  j["smooth_part"] = to_json(r.smooth_part);
  j["flat_part"] = to_json(r.flat_part);
  j["unsolvable_part"] = to_json(r.unsolvable_part);
  j["tree"] = node_json(r.tree);
  return j;
}

Json to_json(const EigenReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["order"] = r.order;
  Json ev = Json::array();
  for (const auto& x : r.eigenvalues) ev.push_back(to_json(x));
  j["eigenvalues"] = ev;
  Json groups = Json::array();
  for (const auto& g : r.groups) {
    Json gj;
    gj["value"] = to_json(g.value);
    gj["multiplicity"] = g.multiplicity;
    gj["flat_meet_suspect"] = g.flat_suspect;
    Json frame = Json::array();
    for (const auto& v : g.frame) {
      Json vj = Json::array();
      for (const auto& x : v) vj.push_back(to_json(x));
      frame.push_back(vj);
    }
    gj["frame"] = frame;
    groups.push_back(gj);
  }
  j["groups"] = groups;
  j["notes"] = r.notes;
  j["solve"] = to_json(r.solve);
  return j;
}

Json to_json(const RootGrid& g) {
  Json j;
  j["mode"] = g.mode == GridMode::Ordered ? "ordered" : "matched";
  j["t"] = g.ts;
  if (g.mode == GridMode::Ordered) {
    j["roots"] = g.roots;
  } else {
    Json rows = Json::array();
    for (const auto& row : g.croots) {
      Json r = Json::array();
      for (const auto& z : row) r.push_back(Json::array({z.real(), z.imag()}));
      rows.push_back(r);
    }
    j["roots"] = rows;
  }
  j["arrangement"] = g.arrangement;
  j["notes"] = g.notes;
  return j;
}

Json meets_json(const RootGrid& g, const TrackOptions& opts) {
  Json j;
  j["schema"] = kSchema;
  j["meet_rel_tol"] = opts.meet_rel_tol;
  j["window_steps"] = opts.window_steps;
  j["order_ceiling"] = opts.flat_ceiling;
  j["order_estimate_note"] =
      "orders are log-log regression estimates on sampled gaps; flat_suspect marks slopes above the ceiling";
  Json ms = Json::array();
  for (const auto& m : g.meets) {
    Json mj;
    mj["i"] = m.i + 1;
    mj["j"] = m.j + 1;
    mj["t"] = m.t;
    mj["order_estimate"] = m.order_estimate;
    mj["slope"] = m.slope;
    mj["flat_suspect"] = m.flat_suspect;
    mj["crossing"] = m.crossing;
    ms.push_back(mj);
  }
  j["meets"] = ms;
  j["notes"] = g.notes;
  return j;
}

Json to_json(const EigenGrid& g, const TrackOptions& opts) {
  Json j;
  j["schema"] = kSchema;
  j["grid"] = to_json(g.grid);
  j["meets"] = meets_json(g.grid, opts)["meets"];
  Json ob;
  ob["window_variation"] = g.obstruction.window_variation;
  ob["eigenvector_variation"] = g.obstruction.eigenvector_variation;
  ob["continuity_obstruction"] = g.obstruction.raised;
  j["obstruction"] = ob;
  if (!g.second_differences.peaks.empty()) {
    Json sd;
    sd["peaks"] = g.second_differences.peaks;
    sd["monotone"] = g.second_differences.monotone;
    sd["exponent"] = g.second_differences.exponent;
    sd["blowup"] = g.second_differences.blowup;
    j["second_differences"] = sd;
  }
  return j;
}

std::string grid_csv(const RootGrid& g) {
  std::ostringstream out;
  const int n = g.degree();
  const bool cplx = g.mode == GridMode::Matched;
  out << "t";
  for (int k = 1; k <= n; ++k) {
    if (cplx) out << ",x_" << k << "_re,x_" << k << "_im";
    else out << ",x_" << k;
  }
  out << ",sigma\n";
  const auto xs = g.arranged_complex();
  for (int s = 0; s < g.size(); ++s) {
    const auto su = static_cast<std::size_t>(s);
    out << fmt(g.ts[su]);
    for (int k = 0; k < n; ++k) {
      const auto z = xs[static_cast<std::size_t>(k)][su];
      out << ',' << fmt(z.real());
      if (cplx) out << ',' << fmt(z.imag());
    }
    out << ',';
    for (int k = 0; k < n; ++k) out << (k ? " " : "") << g.arrangement[su][static_cast<std::size_t>(k)] + 1;
    out << '\n';
  }
  return out.str();
}

corpus::SampledPoly read_sampled_csv(std::istream& in) {
  corpus::SampledPoly p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    std::vector<double> v;
    bool numeric = true;
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(c, &used));
        numeric = numeric && c.find_first_not_of(" \t", used) == std::string::npos;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (p.ts.empty() && lineno == 1) continue;  // header
      bad("line " + std::to_string(lineno) + " is not numeric");
    }
    if (v.size() < 2) bad("line " + std::to_string(lineno) + " needs t and at least one coefficient");
    if (p.degree == 0) p.degree = static_cast<int>(v.size()) - 1;
    if (static_cast<int>(v.size()) - 1 != p.degree) bad("line " + std::to_string(lineno) + " has the wrong width");
    p.ts.push_back(v[0]);
    p.a.emplace_back(v.begin() + 1, v.end());
  }
  if (p.ts.empty()) bad("no samples");
  check_increasing(p.ts);
  return p;
}

const char* kind_name(FamilySpec::Kind k) {
  switch (k) {
    case FamilySpec::Kind::PolyJet: return "poly-jet";
    case FamilySpec::Kind::PolySampled: return "poly-sampled";
    case FamilySpec::Kind::HermitianJet: return "hermitian-jet";
    case FamilySpec::Kind::HermitianSampled: return "hermitian-sampled";
    case FamilySpec::Kind::Corpus: return "corpus";
  }
  return "?";
}

Json to_json(const FamilySpec& f) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind_name(f.kind);
  Json opt;
  opt["order"] = f.order;
  opt["mode"] = f.mode == Mode::Real ? "real" : "complex";
  opt["tol"] = f.tol;
  if (!f.grid.empty()) opt["grid"] = f.grid;
  j["options"] = opt;
  switch (f.kind) {
    case FamilySpec::Kind::PolyJet: j["poly"] = to_json(f.poly); break;
    case FamilySpec::Kind::PolySampled: {
      j["degree"] = f.sampled.degree;
      Json s = Json::array();
      for (std::size_t k = 0; k < f.sampled.ts.size(); ++k) {
        Json row;
        row["t"] = f.sampled.ts[k];
        row["a"] = f.sampled.a[k];
        s.push_back(row);
      }
      j["samples"] = s;
      break;
    }
    case FamilySpec::Kind::HermitianJet: {
      j["n"] = f.hermitian.n();
      Json rows = Json::array();
      for (const auto& row : f.hermitian.entries()) {
        Json r = Json::array();
        for (const auto& x : row) {
          Json e;
          e["re"] = to_json(x.real_part());
          e["im"] = to_json(x.imag_part());
          r.push_back(e);
        }
        rows.push_back(r);
      }
      j["entries"] = rows;
      break;
    }
    case FamilySpec::Kind::HermitianSampled: {
      j["n"] = f.hsampled.n;
      Json s = Json::array();
      for (std::size_t k = 0; k < f.hsampled.ts.size(); ++k) {
        Json row;
        row["t"] = f.hsampled.ts[k];
        row["re"] = matrix_json(f.hsampled.a[k], false);
        row["im"] = matrix_json(f.hsampled.a[k], true);
        s.push_back(row);
      }
      j["samples"] = s;
      break;
    }
    case FamilySpec::Kind::Corpus:
      j["name"] = f.corpus_name;
      j["params"] = params_json(f.params);
      break;
  }
  if (!f.metadata.is_null()) j["metadata"] = f.metadata;
  return j;
}

FamilySpec family_from_json(const Json& j) {
  try {
    if (!j.is_object()) bad("family spec must be a JSON object");
    if (field(j, "schema").get<int>() != kSchema) bad("unsupported schema " + j.at("schema").dump());
    FamilySpec f;
    const std::string kind = field(j, "kind").get<std::string>();
    if (j.contains("options")) {
      const Json& o = j.at("options");
      if (o.contains("order")) f.order = o.at("order").get<int>();
      if (o.contains("mode")) {
        const std::string m = o.at("mode").get<std::string>();
        if (m != "real" && m != "complex") bad("mode must be real or complex");
        f.mode = m == "real" ? Mode::Real : Mode::Complex;
      }
      if (o.contains("tol")) f.tol = o.at("tol").get<double>();
      if (o.contains("grid")) f.grid = o.at("grid").get<std::string>();
    }
    if (f.order < 0) bad("order must be nonnegative");
    if (j.contains("metadata")) f.metadata = j.at("metadata");

    if (kind == "poly-jet") {
      f.kind = FamilySpec::Kind::PolyJet;
      f.poly = polycurve_from_json(field(j, "poly"));
      if (f.order < f.poly.degree()) bad("order must be at least the degree");
    } else if (kind == "poly-sampled") {
      f.kind = FamilySpec::Kind::PolySampled;
      f.sampled.degree = field(j, "degree").get<int>();
      if (f.sampled.degree < 1) bad("degree must be positive");
      for (const auto& row : field(j, "samples")) {
        f.sampled.ts.push_back(field(row, "t").get<double>());
        auto a = doubles(field(row, "a"), "a");
        if (static_cast<int>(a.size()) != f.sampled.degree) bad("sample has the wrong number of coefficients");
        f.sampled.a.push_back(std::move(a));
      }
      check_increasing(f.sampled.ts);
    } else if (kind == "hermitian-jet") {
      f.kind = FamilySpec::Kind::HermitianJet;
      const int n = field(j, "n").get<int>();
      JetMatrix re, im;
      for (const auto& row : field(j, "entries")) {
        JetVector r, i;
        for (const auto& e : row) {
          r.push_back(jet_from_json(field(e, "re")));
          i.push_back(e.contains("im") ? jet_from_json(e.at("im")) : Jet::zero(r.back().order()));
        }
        re.push_back(std::move(r));
        im.push_back(std::move(i));
      }
      if (static_cast<int>(re.size()) != n) bad("entries do not match n");
      f.hermitian = HermitianCurve::from_parts(re, im);
    } else if (kind == "hermitian-sampled") {
      f.kind = FamilySpec::Kind::HermitianSampled;
      f.hsampled.n = field(j, "n").get<int>();
      for (const auto& row : field(j, "samples")) {
        f.hsampled.ts.push_back(field(row, "t").get<double>());
        const Json& re = field(row, "re");
        const Json im = row.contains("im") ? row.at("im") : Json();
        CMatrix m;
        for (std::size_t r = 0; r < re.size(); ++r) {
          const auto rr = doubles(re[r], "re");
          const auto ii = im.is_null() ? std::vector<double>(rr.size(), 0.0) : doubles(im[r], "im");
          if (rr.size() != ii.size()) bad("re and im rows differ in length");
          std::vector<std::complex<double>> z;
          for (std::size_t c = 0; c < rr.size(); ++c) z.emplace_back(rr[c], ii[c]);
          m.push_back(std::move(z));
        }
        if (static_cast<int>(m.size()) != f.hsampled.n) bad("sample matrix does not match n");
        f.hsampled.a.push_back(std::move(m));
      }
      check_increasing(f.hsampled.ts);
    } else if (kind == "corpus") {
      f.kind = FamilySpec::Kind::Corpus;
      f.corpus_name = field(j, "name").get<std::string>();
      f.params = params_from_json(j.contains("params") ? j.at("params") : Json());
    } else {
      bad("unknown kind '" + kind + "'");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed family spec: ") + e.what());
  }
}

FamilySpec family_from_corpus(const corpus::CorpusEntry& e) {
  FamilySpec f;
  if (const auto* p = std::get_if<corpus::SampledPoly>(&e.data)) {
    f.kind = FamilySpec::Kind::PolySampled;
    f.sampled = *p;
  } else {
    f.kind = FamilySpec::Kind::HermitianSampled;
    f.hsampled = std::get<corpus::SampledHermitian>(e.data);
  }
  Json m;
  m["corpus"] = e.name;
  m["description"] = e.description;
  m["params"] = params_json(e.params);
  m["expected"] = e.expected;
  Json marks = Json::array();
  for (const auto& [n, t] : e.marks) marks.push_back({{"n", n}, {"t", t}});
  m["marks"] = marks;
  if (!e.windows.empty()) {
    Json w = Json::array();
    for (const auto& [lo, hi] : e.windows) w.push_back(Json::array({lo, hi}));
    m["windows"] = w;
  }
  Json ref = Json::array();
  for (const auto& r : e.reference) {
    Json rj;
    rj["name"] = r.name;
    rj["n"] = r.n;
    if (!r.exact.empty()) rj["exact"] = r.exact;
    rj["value"] = r.value;
    ref.push_back(rj);
  }
  m["reference"] = ref;
  m["notes"] = e.notes;
  f.metadata = m;
  return f;
}

FamilySpec resolve(const FamilySpec& f) {
  if (f.kind != FamilySpec::Kind::Corpus) return f;
  FamilySpec out = family_from_corpus(corpus::make(f.corpus_name, f.params));
  out.order = f.order;
  out.mode = f.mode;
  out.tol = f.tol;
  out.grid = f.grid;
  return out;
}

}  // namespace smoothroots::io

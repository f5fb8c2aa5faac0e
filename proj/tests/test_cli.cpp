#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "smoothroots/error.hpp"
#include "smoothroots/io.hpp"
#include "smoothroots/polyparse.hpp"

using namespace smoothroots;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("smoothroots_cli_" + std::to_string(getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout.
Run run(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch() / ("stdout_" + std::to_string(counter++));
  const std::string cmd = std::string(SMOOTHROOTS_CLI_PATH) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

io::Json json_of(const Run& r) { return io::Json::parse(r.out); }

}  // namespace

TEST_CASE("poly grammar") {
  const BiPoly p = parse_bipoly("3x^2 - 2/3 t x + (t+1)^2");
  CHECK(p.at({2, 0}) == 3);
  CHECK(p.at({1, 1}) == mpq_class(-2, 3));
  CHECK(p.at({0, 2}) == 1);
  CHECK(p.at({0, 1}) == 2);
  CHECK(p.at({0, 0}) == 1);
  CHECK(parse_bipoly("x*x - x^2").empty());
  CHECK(parse_bipoly("-x").at({1, 0}) == -1);

  for (const char* bad : {"", "x^", "x +", "2/0", "(x", "y", "x^-1", "x..1", "x^99999999"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_bipoly(bad), Error);
  }

  // x^3 - 3x + 2 in the alternating convention: a = (0, -3, -2).
  const PolyCoeffs c = parse_poly_coeffs("x^3 - 3x + 2");
  CHECK(c(1) == Scalar(0));
  CHECK(c(2) == Scalar(-3));
  CHECK(c(3) == Scalar(-2));
  // Non-monic input is normalized; t-dependent leading terms are rejected.
  const PolyCurve q = parse_poly_curve("2x^2 - 2t^2", 8);
  CHECK(q.a(2) == Jet::polynomial({Scalar(0), Scalar(0), Scalar(-1)}, 8));
  CHECK_THROWS_AS(parse_poly_curve("t x^2 - 1", 8), Error);
  CHECK_THROWS_AS(parse_poly_coeffs("x^2 - t"), Error);
}

TEST_CASE("certify command") {
  auto r = run("certify --poly \"x^2-1\"");
  CHECK(r.code == 0);
  CHECK(json_of(r)["all_real"] == true);
  CHECK(json_of(r)["schema"] == 1);

  r = run("certify --poly \"x^2+1\"");
  CHECK(r.code == 1);
  CHECK(json_of(r)["all_real"] == false);

  r = run("certify --poly \"x^3-3x+2\"");
  CHECK(r.code == 0);
  CHECK(json_of(r)["rank"] == 2);
  CHECK(json_of(r)["signature"] == 2);
}

TEST_CASE("solve command") {
  auto r = run("solve --poly \"x^2-t^2\" --order 8");
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["solvable"] == true);
  REQUIRE(j["roots"].size() == 2);
  std::vector<Jet> roots;
  for (const auto& x : j["roots"]) roots.push_back(io::jet_from_json(x));
  const Jet t = Jet::variable(8);
  CHECK(((roots[0] == t && roots[1] == -t) || (roots[0] == -t && roots[1] == t)));

  // (x^2 - t^4)(x - t)(x + t).
  r = run("solve --poly \"(x^2 - t^4)(x^2 - t^2)\" --order 16");
  CHECK(r.code == 0);
  CHECK(json_of(r)["roots"].size() == 4);

  CHECK(run("solve --poly \"x^2-t^3\" --mode complex").code == 2);
  CHECK(run("solve --poly \"x^2-t^3\"").code == 1);
  CHECK(run("solve --poly \"x^2+\"").code == 3);
  CHECK(run("solve").code == 3);
  CHECK(run("solve --input /nonexistent.json").code == 3);
  CHECK(run("bogus").code == 3);
}

TEST_CASE("track command writes CSV and a meets sidecar") {
  const fs::path out = scratch() / "track";
  const auto r = run("track --poly \"x^2-t^2\" --grid -1:1:40 --format csv --out " + out.string());
  REQUIRE(r.code == 0);
  const std::string csv = slurp(out / "track.csv");
  CHECK(csv.rfind("t,x_1,x_2,sigma\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 42);
  const auto meets = io::Json::parse(slurp(out / "meets.json"));
  REQUIRE(meets["meets"].size() == 1);
  CHECK(meets["meets"][0]["crossing"] == true);
  CHECK(meets["meets"][0]["order_estimate"] == 1);

  // Complex mode on x^2 + t^2 and CSV sample input.
  CHECK(run("track --poly \"x^2+t^2\" --grid -1:1:10 --mode complex").code == 0);
  CHECK(run("track --poly \"x^2+t^2\" --grid -1:1:10").code == 1);
  {
    std::ofstream f(scratch() / "samples.csv");
    f << "t,a_1,a_2\n";
    for (int k = -10; k <= 10; ++k) f << k / 10.0 << ",0," << -(k / 10.0) * (k / 10.0) << "\n";
  }
  const auto c = run("track --input " + (scratch() / "samples.csv").string());
  CHECK(c.code == 0);
  CHECK(json_of(c)["grid"]["t"].size() == 21);
}

TEST_CASE("eigen command") {
  const fs::path dir = scratch() / "eigen";
  fs::create_directories(dir);
  {
    io::FamilySpec f;
    f.kind = io::FamilySpec::Kind::HermitianJet;
    const Jet t = Jet::variable(8), z = Jet::zero(8);
    f.hermitian = HermitianCurve(JetMatrix{{z, t}, {t, z}});
    std::ofstream(dir / "m.json") << io::dump(io::to_json(f));
  }
  auto r = run("eigen --order 8 --input " + (dir / "m.json").string());
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["groups"].size() == 2);

  r = run("eigen --corpus ex77");
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["obstruction"]["continuity_obstruction"] == true);

  // The non-hermitian matrix [[2t + t^3, t], [-t, 0]].
  const std::string bad = R"({"schema": 1, "kind": "hermitian-jet", "n": 2, "entries": [
    [{"re": {"coeffs": ["0", "2", "0", "1"]}}, {"re": {"coeffs": ["0", "1"]}}],
    [{"re": {"coeffs": ["0", "-1"]}}, {"re": {"coeffs": ["0"]}}]]})";
  std::ofstream(dir / "bad.json") << bad;
  CHECK(run("eigen --input " + (dir / "bad.json").string()).code == 3);
}

TEST_CASE("corpus output is deterministic and round trips") {
  for (const auto& name : corpus::names()) {
    INFO(name);
    const std::string args = "corpus " + name + " --n-max 3 --window 10";
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto f = io::family_from_json(io::Json::parse(a.out));
    CHECK(io::dump(io::to_json(f)) == a.out);
  }
  CHECK(run("corpus nope").code == 3);
  CHECK(run("corpus ex24 --n-min 0").code == 3);
}

TEST_CASE("family specs round trip") {
  const Jet t = Jet::variable(6);
  io::FamilySpec f;
  f.kind = io::FamilySpec::Kind::PolyJet;
  f.order = 6;
  f.poly = parse_poly_curve("x^3 - 1/3 t x + t^2", 6);
  f.grid = "-1:1:10";
  const std::string text = io::dump(io::to_json(f));
  CHECK(io::dump(io::to_json(io::family_from_json(io::Json::parse(text)))) == text);

  io::FamilySpec h;
  h.kind = io::FamilySpec::Kind::HermitianJet;
  const Jet it = t * Scalar::i();
  h.hermitian = HermitianCurve(JetMatrix{{t, it + Jet::constant(Scalar::rational(1, 2), 6)},
                                         {-it + Jet::constant(Scalar::rational(1, 2), 6), (t * t).to_float()}});
  const std::string htext = io::dump(io::to_json(h));
  CHECK(io::dump(io::to_json(io::family_from_json(io::Json::parse(htext)))) == htext);

  io::FamilySpec c;
  c.kind = io::FamilySpec::Kind::Corpus;
  c.corpus_name = "ex25";
  c.params.n_min = 3;
  c.params.n_max = 8;
  const std::string ctext = io::dump(io::to_json(c));
  CHECK(io::dump(io::to_json(io::family_from_json(io::Json::parse(ctext)))) == ctext);
  CHECK(io::resolve(c).kind == io::FamilySpec::Kind::PolySampled);

  CHECK_THROWS_AS(io::family_from_json(io::Json::parse(R"({"schema": 2, "kind": "poly-jet"})")), Error);
  CHECK_THROWS_AS(io::family_from_json(io::Json::parse(R"({"schema": 1, "kind": "other"})")), Error);
  CHECK_THROWS_AS(io::family_from_json(io::Json::parse(
                      R"({"schema": 1, "kind": "poly-sampled", "degree": 1, "samples": [{"t": 1, "a": [0]}, {"t": 0, "a": [0]}]})")),
                  Error);
}

TEST_CASE("jet and scalar JSON") {
  const Jet x({Scalar::rational(1, 3), Scalar(BigFloat(0.1)), Scalar(Real(2), Real::rational(-1, 7))}, false);
  const Jet y = io::jet_from_json(io::to_json(x));
  CHECK(y.order() == 2);
  CHECK(y[0].exact());
  CHECK_FALSE(y[1].exact());
  CHECK(y == x);
  CHECK(io::to_json(y) == io::to_json(x));
}

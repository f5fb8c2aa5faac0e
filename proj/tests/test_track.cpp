#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "smoothroots/error.hpp"
#include "smoothroots/track.hpp"

using namespace smoothroots;

namespace {

constexpr int kN = 16;

Jet poly(std::initializer_list<long> c, int order = kN) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Jet::polynomial(v, order);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InputError;
}

std::vector<double> doubles(const std::vector<Scalar>& ts) {
  std::vector<double> out;
  for (const auto& t : ts) out.push_back(t.re().to_double());
  return out;
}

// Smallest max-error over global relabelings of the arranged curves.
double best_permutation_error(const std::vector<std::vector<double>>& got,
                              const std::vector<std::vector<double>>& want) {
  std::vector<int> perm(got.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double err = 0;
    for (std::size_t k = 0; k < got.size(); ++k)
      for (std::size_t s = 0; s < got[k].size(); ++s)
        err = std::max(err, std::abs(got[k][s] - want[static_cast<std::size_t>(perm[k])][s]));
    best = std::min(best, err);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Jet random_root(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> num(-8, 8);
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i) c.push_back(Scalar::rational(num(rng), i < 2 ? 8 : 16));
  return Jet::polynomial(c, degree);
}

}  // namespace

TEST_CASE("parse_grid", "[track]") {
  const auto ts = parse_grid("-1:1:4");
  REQUIRE(ts.size() == 5);
  CHECK(ts[1] == Scalar::rational(-1, 2));
  CHECK(ts[4] == Scalar(1));
  CHECK(parse_grid("1/3:2/3:3")[1] == Scalar::rational(4, 9));
  CHECK(code_of([] { parse_grid("0:1"); }) == Errc::InputError);
  CHECK(code_of([] { parse_grid("1:0:3"); }) == Errc::InputError);
  CHECK(code_of([] { parse_grid("0:1:x"); }) == Errc::InputError);
}

TEST_CASE("ordered_roots examples", "[track]") {
  const PolyCurve p({Jet::zero(kN), poly({0, 0, -1})});
  const RootGrid g = ordered_roots(sample_curve(p, {Scalar(-1), Scalar(0), Scalar(1)}));
  REQUIRE(g.size() == 3);
  CHECK(g.roots[0] == std::vector<double>{-1, 1});
  CHECK(g.roots[1] == std::vector<double>{0, 0});
  CHECK(g.roots[2] == std::vector<double>{-1, 1});

  const PolyCurve c = PolyCurve::constant_in_t(PolyCoeffs({Scalar(6), Scalar(11), Scalar(6)}), kN);
  for (const auto& r : ordered_roots(sample_curve(c, parse_grid("0:1:3"))).roots)
    CHECK(r == std::vector<double>{1, 2, 3});

  const PolyCurve bad({Jet::zero(kN), poly({1})});
  CHECK(code_of([&] { ordered_roots(sample_curve(bad, {Scalar(0)})); }) == Errc::NotRealRooted);
}

TEST_CASE("float coefficients with a double root stay real", "[track]") {
  // (x - 0.1)^2 with rounded coefficients
  const PolyCoeffs p({Scalar(Real::from_double(0.2)), Scalar(Real::from_double(0.01))});
  const auto r = real_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Catch::Approx(0.1).margin(1e-7));
  CHECK(r[1] == Catch::Approx(0.1).margin(1e-7));
}

TEST_CASE("classify_meet examples", "[track]") {
  const auto ts = parse_grid("-1:1:200");
  const PolyCurve lin({Jet::zero(kN), poly({0, 0, -1})});
  RootGrid g = ordered_roots(sample_curve(lin, ts));
  MeetEvent m = classify_meet(g, 0, 1, 0.0);
  CHECK(m.order_estimate == 1);
  CHECK_FALSE(m.flat_suspect);

  const PolyCurve quad({Jet::zero(kN), poly({0, 0, 0, 0, -1})});
  g = ordered_roots(sample_curve(quad, ts));
  m = classify_meet(g, 0, 1, 0.0);
  CHECK(m.order_estimate == 2);
  CHECK_FALSE(m.flat_suspect);

  // gap 2 exp(-1/t^2): no finite order fits
  std::vector<double> tt;
  std::vector<std::vector<double>> roots;
  for (int s = -200; s <= 200; ++s) {
    const double t = s / 100.0;
    const double y = t == 0 ? 0 : std::exp(-1 / (t * t));
    tt.push_back(t);
    roots.push_back({-y, y});
  }
  g = ordered_roots(tt, roots);
  TrackOptions wide;
  wide.window_steps = 100;
  m = classify_meet(g, 0, 1, 0.0, wide);
  CHECK(m.flat_suspect);

  CHECK(code_of([&] { classify_meet(g, 0, 1, 5.0); }) == Errc::WindowTooSmall);
}

TEST_CASE("differentiable_arrangement examples", "[track]") {
  const auto ts = parse_grid("-1:1:40");
  const PolyCurve p({Jet::zero(kN), poly({0, 0, -1})});
  const RootGrid g = differentiable_arrangement(ordered_roots(sample_curve(p, ts)));
  const auto x = g.arranged();
  const std::vector<double> t = doubles(ts);
  std::vector<double> up = t, down = t;
  for (auto& v : down) v = -v;
  CHECK(best_permutation_error(x, {up, down}) < 1e-12);
  REQUIRE(g.meets.size() == 1);
  CHECK(g.meets[0].crossing);
  CHECK(g.meets[0].t == Catch::Approx(0).margin(1e-12));
  CHECK(g.meets[0].order_estimate == 1);

  // (x - t)(x - 2t)(x + 3t): three slow meets at 0
  const PolyCurve three = PolyCurve::from_root_jets({poly({0, 1}), poly({0, 2}), poly({0, -3})});
  const RootGrid g3 = differentiable_arrangement(ordered_roots(sample_curve(three, ts)));
  std::vector<double> a = t, b = t, c = t;
  for (std::size_t s = 0; s < t.size(); ++s) {
    b[s] = 2 * t[s];
    c[s] = -3 * t[s];
  }
  CHECK(best_permutation_error(g3.arranged(), {a, b, c}) < 1e-12);
  CHECK(g3.meets.size() == 3);
  for (const auto& m : g3.meets) CHECK(m.order_estimate == 1);

  // x^2 - t^4 touches at 0 and keeps its order.
  const PolyCurve touch({Jet::zero(kN), poly({0, 0, 0, 0, -1})});
  const RootGrid gt = differentiable_arrangement(ordered_roots(sample_curve(touch, ts)));
  REQUIRE(gt.meets.size() == 1);
  CHECK_FALSE(gt.meets[0].crossing);
  CHECK(gt.meets[0].order_estimate == 2);
  for (const auto& sigma : gt.arrangement) CHECK(sigma == std::vector<int>{0, 1});
}

TEST_CASE("a double root along an interval is flagged, not toggled", "[track]") {
  const PolyCurve p = PolyCurve::from_root_jets({poly({0, 1}), poly({0, 1}), poly({1})});
  const RootGrid g = differentiable_arrangement(ordered_roots(sample_curve(p, parse_grid("-1/2:1/2:20"))));
  bool flat = false;
  for (const auto& m : g.meets) flat = flat || m.flat_suspect;
  CHECK(flat);
  for (std::size_t s = 1; s < g.arrangement.size(); ++s) CHECK(g.arrangement[s] == g.arrangement[0]);
}

TEST_CASE("min_cost_assignment agrees with brute force", "[track]") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (auto& row : c)
      for (auto& v : row) v = u(rng);
    const auto a = min_cost_assignment(c);
    double got = 0;
    for (int r = 0; r < n; ++r) got += c[static_cast<std::size_t>(r)][static_cast<std::size_t>(a[static_cast<std::size_t>(r)])];
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
      double s = 0;
      for (int r = 0; r < n; ++r) s += c[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(got == Catch::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("matched_roots follows complex roots through a crossing", "[track]") {
  // x^2 + t^2: roots i t and -i t pass through 0.
  const PolyCurve p({Jet::zero(kN), poly({0, 0, 1})});
  const RootGrid g = matched_roots(sample_curve(p, parse_grid("-1:1:20")));
  const auto x = g.arranged_complex();
  for (const auto& curve : x) {
    const std::complex<double> slope = (curve[1] - curve[0]) / 0.1;
    for (std::size_t s = 1; s < curve.size(); ++s) CHECK(std::abs((curve[s] - curve[s - 1]) / 0.1 - slope) < 1e-9);
  }
}

TEST_CASE("c1_sqrt_track examples", "[track]") {
  std::vector<double> ts, f2, fpp2, f4, fpp4;
  for (int s = -50; s <= 50; ++s) {
    const double t = s / 50.0;
    ts.push_back(t);
    f2.push_back(t * t);
    fpp2.push_back(2);
    f4.push_back(t * t * t * t);
    fpp4.push_back(12 * t * t);
  }
  SqrtTrack r = c1_sqrt_track(ts, f2, fpp2);
  REQUIRE(r.toggles.size() == 1);
  for (std::size_t s = 0; s < ts.size(); ++s) CHECK(r.x[s] == Catch::Approx(-ts[s]).margin(1e-15));
  r = c1_sqrt_track(ts, f4, fpp4);
  CHECK(r.toggles.empty());
  for (std::size_t s = 0; s < ts.size(); ++s) CHECK(r.x[s] == Catch::Approx(ts[s] * ts[s]).margin(1e-15));

  std::vector<double> neg = f2;
  neg[3] = -1;
  CHECK(code_of([&] { c1_sqrt_track(ts, neg, fpp2); }) == Errc::NegativeValue);
}

TEST_CASE("c1_sqrt_track on t^2 sin^2(log t) toggles at every zero", "[track]") {
  // Geometric grid on (0, 1]; zeros at t = e^{-k pi}.
  std::vector<double> ts, f, fpp;
  for (int s = 4000; s >= 0; --s) {
    const double t = std::exp(-s / 400.0);
    const double g = t * std::sin(std::log(t)), dg = std::sin(std::log(t)) + std::cos(std::log(t));
    ts.push_back(t);
    f.push_back(g * g);
    fpp.push_back(2 * dg * dg + 2 * g * (std::cos(std::log(t)) - std::sin(std::log(t))) / t);
  }
  const SqrtTrack r = c1_sqrt_track(ts, f, fpp);
  // zeros e^{-k pi} with e^{-k pi} > e^{-10}: k = 1, 2, 3
  REQUIRE(r.toggles.size() == 3);
  for (int k = 1; k <= 3; ++k) CHECK(r.toggles[static_cast<std::size_t>(3 - k)] == Catch::Approx(std::exp(-k * M_PI)).epsilon(1e-2));
  // The signed root is +-t sin(log t) up to one global sign.
  const double sgn = r.x.back() * std::sin(std::log(ts.back())) >= 0 ? 1 : -1;
  for (std::size_t s = 0; s < ts.size(); ++s)
    CHECK(r.x[s] == Catch::Approx(sgn * ts[s] * std::sin(std::log(ts[s]))).margin(1e-12));
  // Its difference quotient at 0 keeps oscillating between -1 and 1.
  const auto spread = quotient_spread(ts, r.x, 0, 0, 1e-2, 3);
  REQUIRE(spread.size() == 3);
  for (double v : spread) CHECK(v > 0.5);
}

TEST_CASE("sqrt_ratio_audit examples", "[track]") {
  std::vector<double> ts, f2, fpp2, f4, fpp4, z;
  for (int s = -100; s <= 100; ++s) {
    const double t = s / 100.0;
    ts.push_back(t);
    f2.push_back(t * t);
    fpp2.push_back(2);
    f4.push_back(std::pow(t, 4));
    fpp4.push_back(12 * t * t);
    z.push_back(0);
  }
  CHECK(sqrt_ratio_audit(ts, f2, fpp2, 0) == Catch::Approx(1).epsilon(1e-12));
  CHECK(sqrt_ratio_audit(ts, f4, fpp4, 0) <= 1.0);
  CHECK(sqrt_ratio_audit(ts, z, z, 0) == 0);
}

TEST_CASE("ordered roots are continuous under refinement", "[track][property]") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Jet> roots;
    for (int i = 0; i < 3; ++i) roots.push_back(random_root(rng, 3).extended(kN));
    const PolyCurve p = PolyCurve::from_root_jets(roots);
    double prev = 0;
    for (int steps : {40, 80, 160}) {
      const RootGrid g = ordered_roots(sample_curve(p, parse_grid("-1:1:" + std::to_string(steps))));
      double m = 0;
      for (std::size_t s = 1; s < g.ts.size(); ++s)
        for (std::size_t k = 0; k < 3; ++k) m = std::max(m, std::abs(g.roots[s][k] - g.roots[s - 1][k]));
      if (prev > 0) CHECK(m < 0.75 * prev);
      prev = m;
    }
  }
}

TEST_CASE("arrangement recovers constructed root curves", "[track][property]") {
  std::mt19937 rng(4);
  const auto ts = parse_grid("-1:1:200");
  const auto t = doubles(ts);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Jet> roots;
    std::vector<std::vector<double>> want;
    for (int i = 0; i < n; ++i) {
      roots.push_back(random_root(rng, 1 + trial % 3).extended(kN));
      std::vector<double> v;
      for (double x : t) v.push_back(roots.back().evaluate(x));
      want.push_back(v);
    }
    const PolyCurve p = PolyCurve::from_root_jets(roots);
    const RootGrid g = differentiable_arrangement(ordered_roots(sample_curve(p, ts)));
    CHECK(best_permutation_error(g.arranged(), want) < 1e-8);

    // Sign-schedule parity: a pair's relative order at any sample equals its
    // order at the first sample times (-1)^(crossings in between).
    const auto x = g.arranged();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const double d0 = x[static_cast<std::size_t>(a)][0] - x[static_cast<std::size_t>(b)][0];
        if (std::abs(d0) < 1e-6) continue;
        for (std::size_t s = 1; s < t.size(); ++s) {
          const double ds = x[static_cast<std::size_t>(a)][s] - x[static_cast<std::size_t>(b)][s];
          if (std::abs(ds) < 1e-6) continue;
          int flips = 0;
          for (std::size_t u = 1; u <= s; ++u) {
            const int pa0 = g.arrangement[u - 1][static_cast<std::size_t>(a)], pb0 = g.arrangement[u - 1][static_cast<std::size_t>(b)];
            const int pa1 = g.arrangement[u][static_cast<std::size_t>(a)], pb1 = g.arrangement[u][static_cast<std::size_t>(b)];
            if ((pa0 < pb0) != (pa1 < pb1)) ++flips;
          }
          CHECK(((d0 > 0) == (ds > 0)) == (flips % 2 == 0));
        }
      }

    // Residual of the arranged roots.
    for (std::size_t s = 0; s < t.size(); s += 10) {
      const PolyCoeffs c = p.at(ts[s]);
      double scale = 1;
      for (int k = 1; k <= n; ++k) scale = std::max(scale, c(k).abs_double());
      for (const auto& curve : x) {
        const Scalar r = upoly::eval(c.to_upoly(), Scalar(Real::from_double(curve[s])));
        CHECK(r.abs_double() <= 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("peak_growth and meet_jump", "[track]") {
  // |t| - 1/k kinks sharpen as k grows: peaks of D^2 grow like k.
  std::vector<double> ts;
  for (int s = 0; s <= 4000; ++s) ts.push_back(s / 1000.0);
  std::vector<double> x(ts.size());
  std::vector<std::pair<int, double>> marks;
  for (int k = 1; k <= 4; ++k) marks.push_back({k, k - 0.5});
  for (std::size_t s = 0; s < ts.size(); ++s) {
    const int k = std::min(4, static_cast<int>(ts[s]) + 1);
    const double d = ts[s] - (k - 0.5);
    x[s] = std::sqrt(d * d + 1.0 / (k * k * k * k * 100.0));
  }
  const GrowthReport r = peak_growth(ts, {x}, marks, 0.25, 2);
  CHECK(r.monotone);
  CHECK(r.blowup);
  CHECK(r.exponent > 1.5);

  const PolyCurve p({Jet::zero(kN), poly({0, 0, -1})});
  const RootGrid g = differentiable_arrangement(ordered_roots(sample_curve(p, parse_grid("-1:1:40"))));
  CHECK(meet_jump(g) < 1e-12);
  CHECK(max_step(g) == Catch::Approx(0.05));
}

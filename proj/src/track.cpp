#include "smoothroots/track.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "smoothroots/error.hpp"

namespace smoothroots {

std::vector<CurveSample> sample_curve(const PolyCurve& p, const std::vector<Scalar>& ts) {
  std::vector<CurveSample> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back({t, p.at(t)});
  return out;
}

std::vector<Scalar> parse_grid(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw Error(Errc::InputError, "grid must look like a:b:steps, got '" + spec + "'");
  Scalar a, b;
  long steps = 0;
  try {
    a = Scalar(Real::parse(spec.substr(0, c1)));
    b = Scalar(Real::parse(spec.substr(c1 + 1, c2 - c1 - 1)));
    std::size_t used = 0;
    const std::string s = spec.substr(c2 + 1);
    steps = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const Error&) {
    throw Error(Errc::InputError, "bad grid bound in '" + spec + "'");
  } catch (const std::exception&) {
    throw Error(Errc::InputError, "bad step count in '" + spec + "'");
  }
  if (steps < 1) throw Error(Errc::InputError, "grid needs at least one step");
  if (!(a.re() < b.re())) throw Error(Errc::InputError, "grid needs a < b");
  std::vector<Scalar> ts;
  ts.reserve(static_cast<std::size_t>(steps) + 1);
  const Scalar width = b - a;
  for (long k = 0; k <= steps; ++k) ts.push_back(a + width * Scalar::rational(k, steps));
  return ts;
}

int RootGrid::degree() const {
  if (!roots.empty()) return static_cast<int>(roots.front().size());
  if (!croots.empty()) return static_cast<int>(croots.front().size());
  return 0;
}

std::vector<std::vector<double>> RootGrid::arranged() const {
  const int n = degree();
  std::vector<std::vector<double>> x(static_cast<std::size_t>(n), std::vector<double>(ts.size()));
  for (std::size_t s = 0; s < ts.size(); ++s)
    for (int k = 0; k < n; ++k) {
      const int idx = arrangement.empty() ? k : arrangement[s][static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(k)][s] = roots[s][static_cast<std::size_t>(idx)];
    }
  return x;
}

std::vector<std::vector<std::complex<double>>> RootGrid::arranged_complex() const {
  const int n = degree();
  std::vector<std::vector<std::complex<double>>> x(static_cast<std::size_t>(n),
                                                   std::vector<std::complex<double>>(ts.size()));
  for (std::size_t s = 0; s < ts.size(); ++s)
    for (int k = 0; k < n; ++k) {
      const int idx = arrangement.empty() ? k : arrangement[s][static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(k)][s] =
          mode == GridMode::Matched ? croots[s][static_cast<std::size_t>(idx)] : roots[s][static_cast<std::size_t>(idx)];
    }
  return x;
}

namespace {

// max(1, max |a_k|^{1/k}): bounds the root moduli up to a factor 2.
double root_scale(const PolyCoeffs& p) {
  double s = 1;
  for (int k = 1; k <= p.degree(); ++k) s = std::max(s, std::pow(p(k).abs_double(), 1.0 / k));
  return s;
}

double median_step(const std::vector<double>& ts) {
  if (ts.size() < 2) return 0;
  std::vector<double> d;
  for (std::size_t s = 1; s < ts.size(); ++s) d.push_back(ts[s] - ts[s - 1]);
  std::nth_element(d.begin(), d.begin() + static_cast<long>(d.size() / 2), d.end());
  return d[d.size() / 2];
}

void check_increasing(const std::vector<double>& ts) {
  for (std::size_t s = 1; s < ts.size(); ++s)
    if (!(ts[s] > ts[s - 1])) throw Error(Errc::InputError, "sample times must be strictly increasing");
}

std::vector<std::vector<int>> identity_arrangement(std::size_t samples, int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return std::vector<std::vector<int>>(samples, id);
}

// Lagrange extrapolation to t from up to three previous samples.
double extrapolate(const std::vector<double>& ts, const std::vector<double>& xs, double t) {
  double r = 0;
  for (std::size_t a = 0; a < ts.size(); ++a) {
    double w = 1;
    for (std::size_t b = 0; b < ts.size(); ++b)
      if (a != b) w *= (t - ts[b]) / (ts[a] - ts[b]);
    r += w * xs[a];
  }
  return r;
}

}  // namespace

std::vector<double> real_roots(const PolyCoeffs& p, const TrackOptions& opts) {
  if (p.degree() == 0) return {};
  if (!p.is_real()) throw Error(Errc::NotRealRooted, "complex coefficients");
  const double scale = root_scale(p);
  // Rounded coefficients split multiple roots by about sqrt(eps); those are
  // meets, not complex pairs.
  const double tol = opts.imag_rel_tol * scale + (p.exact() ? 0.0 : opts.meet_rel_tol * scale);
  std::vector<double> out;
  for (const auto& r : p.roots()) {
    const std::complex<double> z = r.to_complex();
    if (std::abs(z.imag()) > tol) {
      std::ostringstream os;
      os << "root " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i exceeds the imaginary tolerance "
         << tol;
      throw Error(Errc::NotRealRooted, os.str());
    }
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootGrid ordered_roots(const std::vector<CurveSample>& samples, const TrackOptions& opts) {
  RootGrid g;
  g.mode = GridMode::Ordered;
  for (const auto& s : samples) {
    g.ts.push_back(s.t.re().to_double());
    g.roots.push_back(real_roots(s.p, opts));
    if (g.roots.back().size() != g.roots.front().size())
      throw Error(Errc::InputError, "samples have different degrees");
  }
  check_increasing(g.ts);
  g.arrangement = identity_arrangement(g.ts.size(), g.degree());
  return g;
}

RootGrid ordered_roots(const std::vector<double>& ts, const std::vector<std::vector<double>>& roots) {
  if (ts.size() != roots.size()) throw Error(Errc::InputError, "one root list per sample expected");
  RootGrid g;
  g.ts = ts;
  g.roots = roots;
  for (auto& r : g.roots) {
    std::sort(r.begin(), r.end());
    if (r.size() != g.roots.front().size()) throw Error(Errc::InputError, "samples have different degrees");
  }
  check_increasing(g.ts);
  g.arrangement = identity_arrangement(g.ts.size(), g.degree());
  return g;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0;
}

MeetEvent classify_meet(const RootGrid& grid, int i, int j, double t_star, const TrackOptions& opts) {
  MeetEvent ev;
  ev.i = std::min(i, j);
  ev.j = std::max(i, j);
  ev.t = t_star;
  double scale = 1;
  for (const auto& r : grid.roots)
    for (double y : r) scale = std::max(scale, std::abs(y));
  const double w = opts.window_steps * median_step(grid.ts);
  const double floor = 1e-12 * scale;
  std::vector<double> lx, ly;
  int in_window = 0;
  for (std::size_t s = 0; s < grid.ts.size(); ++s) {
    const double d = std::abs(grid.ts[s] - t_star);
    if (d > w || d <= 1e-12 * w) continue;
    ++in_window;
    const double gap = std::abs(grid.roots[s][static_cast<std::size_t>(ev.j)] - grid.roots[s][static_cast<std::size_t>(ev.i)]);
    if (gap <= floor) continue;
    lx.push_back(std::log(d));
    ly.push_back(std::log(gap));
  }
  if (in_window < 4) throw Error(Errc::WindowTooSmall, "fewer than 4 samples near t = " + std::to_string(t_star));
  if (lx.size() < 4) {
    // The gap is below the noise floor almost everywhere near t*.
    ev.slope = std::numeric_limits<double>::infinity();
    ev.flat_suspect = true;
    ev.order_estimate = static_cast<int>(opts.flat_ceiling) + 1;
    return ev;
  }
  ev.slope = fit_slope(lx, ly);
  double rss = 0;
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / static_cast<double>(lx.size());
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / static_cast<double>(ly.size());
  for (std::size_t k = 0; k < lx.size(); ++k) {
    const double r = ly[k] - my - ev.slope * (lx[k] - mx);
    rss += r * r;
  }
  const double rms = std::sqrt(rss / static_cast<double>(lx.size()));
  ev.order_estimate = std::max(1, static_cast<int>(std::lround(ev.slope)));
  ev.flat_suspect = ev.slope > opts.flat_ceiling || rms > 1.0;
  return ev;
}

RootGrid differentiable_arrangement(RootGrid g, const TrackOptions& opts) {
  if (g.mode != GridMode::Ordered) throw Error(Errc::PreconditionViolated, "arrangement needs ordered roots");
  const int n = g.degree();
  const std::size_t S = g.ts.size();
  g.arrangement = identity_arrangement(S, n);
  g.meets.clear();
  if (S == 0 || n == 0) return g;

  double scale = 1;
  for (const auto& r : g.roots)
    for (double y : r) scale = std::max(scale, std::abs(y));
  const double tie = opts.meet_rel_tol * scale;
  const double gap_break = 10 * median_step(g.ts);

  // order[p]: arranged curve sitting at ordered position p.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::size_t seg_start = 0;
  std::vector<double> pred(static_cast<std::size_t>(n));
  for (std::size_t s = 1; s < S; ++s) {
    if (g.ts[s] - g.ts[s - 1] > gap_break) seg_start = s;
    const std::size_t first = std::max(seg_start, s >= 3 ? s - 3 : 0);
    std::vector<int> prev_pos = g.arrangement[s - 1];
    if (first < s) {
      std::vector<double> tt(g.ts.begin() + static_cast<long>(first), g.ts.begin() + static_cast<long>(s));
      for (int k = 0; k < n; ++k) {
        std::vector<double> xs;
        for (std::size_t u = first; u < s; ++u) xs.push_back(g.roots[u][static_cast<std::size_t>(g.arrangement[u][static_cast<std::size_t>(k)])]);
        pred[static_cast<std::size_t>(k)] = extrapolate(tt, xs, g.ts[s]);
      }
      // Tie-stable sort: curves only pass each other when the prediction
      // separates them by more than the meet tolerance.
      for (bool swapped = true; swapped;) {
        swapped = false;
        for (int p = 0; p + 1 < n; ++p) {
          const int a = order[static_cast<std::size_t>(p)], b = order[static_cast<std::size_t>(p + 1)];
          if (pred[static_cast<std::size_t>(a)] > pred[static_cast<std::size_t>(b)] + tie) {
            std::swap(order[static_cast<std::size_t>(p)], order[static_cast<std::size_t>(p + 1)]);
            swapped = true;
          }
        }
      }
    }
    for (int p = 0; p < n; ++p) g.arrangement[s][static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;

    // Record the crossings.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int pa0 = prev_pos[static_cast<std::size_t>(a)], pb0 = prev_pos[static_cast<std::size_t>(b)];
        const int pa1 = g.arrangement[s][static_cast<std::size_t>(a)], pb1 = g.arrangement[s][static_cast<std::size_t>(b)];
        if (!(pa0 < pb0 && pa1 > pb1)) continue;
        const double d0 = g.roots[s - 1][static_cast<std::size_t>(pa0)] - g.roots[s - 1][static_cast<std::size_t>(pb0)];
        const double d1 = g.roots[s][static_cast<std::size_t>(pa1)] - g.roots[s][static_cast<std::size_t>(pb1)];
        MeetEvent ev;
        ev.i = pa0;
        ev.j = pb0;
        ev.crossing = true;
        ev.t = d1 - d0 > 0 ? g.ts[s - 1] + (g.ts[s] - g.ts[s - 1]) * (-d0) / (d1 - d0) : g.ts[s - 1];
        g.meets.push_back(ev);
      }
  }

  // Touching meets: runs of samples where adjacent ordered roots agree.
  const double meet_tol = opts.meet_rel_tol * scale;
  for (int p = 0; p + 1 < n; ++p) {
    std::size_t s = 0;
    while (s < S) {
      auto gap = [&](std::size_t u) {
        return g.roots[u][static_cast<std::size_t>(p + 1)] - g.roots[u][static_cast<std::size_t>(p)];
      };
      if (gap(s) >= meet_tol) {
        ++s;
        continue;
      }
      std::size_t e = s;
      while (e + 1 < S && gap(e + 1) < meet_tol) ++e;
      const std::size_t mid = (s + e) / 2;
      const double lo = g.ts[s > 0 ? s - 1 : 0], hi = g.ts[std::min(e + 1, S - 1)];
      bool explained = false;
      for (const auto& m : g.meets)
        if (m.crossing && m.t >= lo && m.t <= hi && m.i <= p + 1 && m.j >= p) explained = true;
      if (!explained) {
        MeetEvent ev;
        ev.i = p;
        ev.j = p + 1;
        ev.t = g.ts[mid];
        if (e - s >= 2) {
          // Coincident over a stretch of samples: flat to sample precision.
          ev.flat_suspect = true;
          ev.order_estimate = static_cast<int>(opts.flat_ceiling) + 1;
          ev.slope = std::numeric_limits<double>::infinity();
          std::ostringstream os;
          os << "positions " << p << "," << p + 1 << " coincide on [" << g.ts[s] << ", " << g.ts[e] << "]";
          g.notes.push_back(os.str());
        }
        g.meets.push_back(ev);
      }
      s = e + 1;
    }
  }

  for (auto& m : g.meets) {
    if (m.flat_suspect) continue;
    try {
      const MeetEvent c = classify_meet(g, m.i, m.j, m.t, opts);
      m.order_estimate = c.order_estimate;
      m.flat_suspect = c.flat_suspect;
      m.slope = c.slope;
    } catch (const Error& e) {
      if (e.code() != Errc::WindowTooSmall) throw;
      std::ostringstream os;
      os << "meet at t=" << m.t << " left unclassified: window too small";
      g.notes.push_back(os.str());
    }
    if (m.crossing && m.flat_suspect) {
      std::ostringstream os;
      os << "curves cross at t=" << m.t << " with a flat-suspect gap; the swap follows the sweep prediction";
      g.notes.push_back(os.str());
    }
  }
  std::sort(g.meets.begin(), g.meets.end(), [](const MeetEvent& a, const MeetEvent& b) {
    return std::tie(a.t, a.i, a.j) < std::tie(b.t, b.i, b.j);
  });
  return g;
}

std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  // Hungarian algorithm with potentials, rows and columns 1-based inside.
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0), v(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    do {
      used[static_cast<std::size_t>(j0)] = true;
      const int i0 = p[static_cast<std::size_t>(j0)];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                           u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) row_to_col[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  return row_to_col;
}

RootGrid matched_roots(const std::vector<CurveSample>& samples) {
  RootGrid g;
  g.mode = GridMode::Matched;
  for (const auto& s : samples) {
    g.ts.push_back(s.t.re().to_double());
    std::vector<std::complex<double>> r;
    for (const auto& z : s.p.roots()) r.push_back(z.to_complex());
    std::sort(r.begin(), r.end(), [](auto a, auto b) { return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag()); });
    if (!g.croots.empty() && r.size() != g.croots.front().size())
      throw Error(Errc::InputError, "samples have different degrees");
    g.croots.push_back(std::move(r));
  }
  check_increasing(g.ts);
  const int n = g.degree();
  g.arrangement = identity_arrangement(g.ts.size(), n);
  for (std::size_t s = 1; s < g.ts.size(); ++s) {
    std::vector<std::vector<double>> cost(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k) {
      auto at = [&](std::size_t u) {
        return g.croots[u][static_cast<std::size_t>(g.arrangement[u][static_cast<std::size_t>(k)])];
      };
      std::complex<double> prev = at(s - 1);
      // Predicting through the last step lets curves pass through a meet.
      if (s >= 2) prev += (at(s - 1) - at(s - 2)) * ((g.ts[s] - g.ts[s - 1]) / (g.ts[s - 1] - g.ts[s - 2]));
      for (int r = 0; r < n; ++r)
        cost[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] = std::abs(g.croots[s][static_cast<std::size_t>(r)] - prev);
    }
    g.arrangement[s] = min_cost_assignment(cost);
  }
  return g;
}

SqrtTrack c1_sqrt_track(const std::vector<double>& ts, const std::vector<double>& f, const std::vector<double>& fpp,
                        double zero_tol, double fpp_tol) {
  const std::size_t S = ts.size();
  if (f.size() != S || fpp.size() != S) throw Error(Errc::InputError, "t, f and f'' must have equal lengths");
  double scale = 1;
  for (double v : f) scale = std::max(scale, std::abs(v));
  std::vector<double> r(S);
  for (std::size_t s = 0; s < S; ++s) {
    if (f[s] < -zero_tol * scale) {
      std::ostringstream os;
      os << "f(" << ts[s] << ") = " << f[s] << " < 0";
      throw Error(Errc::NegativeValue, os.str());
    }
    r[s] = std::sqrt(std::max(f[s], 0.0));
  }
  SqrtTrack out;
  out.x = r;
  double sign = 1;
  std::size_t flip_from = S;  // pending flip index
  for (std::size_t s = 0; s < S; ++s) {
    if (s == flip_from) {
      sign = -sign;
      flip_from = S;
    }
    out.x[s] = sign * r[s];
    if (s == 0 || s + 1 >= S) continue;
    bool zero = f[s] <= zero_tol * scale;
    bool left = false;  // zero lies strictly left of t_s
    if (!zero && r[s] <= r[s - 1] && r[s] < r[s + 1]) {
      // A local minimum of sqrt f that the grid cannot tell apart from a
      // simple zero.
      const double h = std::max(ts[s] - ts[s - 1], ts[s + 1] - ts[s]);
      const double sl = s >= 2 ? std::abs(r[s - 1] - r[s - 2]) / (ts[s - 1] - ts[s - 2]) : 0;
      const double sr = s + 2 < S ? std::abs(r[s + 2] - r[s + 1]) / (ts[s + 2] - ts[s + 1]) : 0;
      if (r[s] <= h * std::max(sl, sr)) {
        zero = true;
        left = r[s - 1] < r[s + 1];
      }
    }
    if (!zero || !(fpp[s] > fpp_tol)) continue;
    if (left) {
      out.x[s] = -out.x[s];
      sign = -sign;
      out.toggles.push_back(ts[s - 1] + (ts[s] - ts[s - 1]) * r[s - 1] / (r[s - 1] + r[s]));
    } else if (f[s] <= zero_tol * scale) {
      flip_from = s + 1;
      out.toggles.push_back(ts[s]);
    } else {
      flip_from = s + 1;
      out.toggles.push_back(ts[s] + (ts[s + 1] - ts[s]) * r[s] / (r[s] + r[s + 1]));
    }
  }
  return out;
}

double sqrt_ratio_audit(const std::vector<double>& ts, const std::vector<double>& f, const std::vector<double>& fpp,
                     double t0, const std::vector<double>& fp) {
  const std::size_t S = ts.size();
  if (f.size() != S || fpp.size() != S || (!fp.empty() && fp.size() != S))
    throw Error(Errc::InputError, "sample vectors must have equal lengths");
  double worst = 0;
  for (std::size_t s = 0; s < S; ++s) {
    double d;
    if (!fp.empty()) {
      d = fp[s];
    } else {
      if (s == 0 || s + 1 >= S) continue;
      d = (f[s + 1] - f[s - 1]) / (ts[s + 1] - ts[s - 1]);
    }
    if (ts[s] == t0 || d == 0) continue;
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < S; ++u) {
      const double rr = (ts[u] - t0) / (ts[s] - t0);
      if (rr >= 0 && rr <= 2) m = std::max(m, fpp[u]);
    }
    if (f[s] <= 0 || m <= 0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, d * d / (2 * f[s] * m));
  }
  return worst;
}

double max_step(const RootGrid& grid) {
  double m = 0;
  for (const auto& x : grid.arranged_complex())
    for (std::size_t s = 1; s < x.size(); ++s) m = std::max(m, std::abs(x[s] - x[s - 1]));
  return m;
}

double meet_jump(const RootGrid& grid) {
  const auto x = grid.arranged();
  const std::size_t S = grid.ts.size();
  double worst = 0;
  for (const auto& m : grid.meets) {
    const auto it = std::lower_bound(grid.ts.begin(), grid.ts.end(), m.t);
    std::size_t s = static_cast<std::size_t>(it - grid.ts.begin());
    if (s > 0 && (s == S || m.t - grid.ts[s - 1] < grid.ts[s] - m.t)) --s;
    if (s == 0 || s + 1 >= S) continue;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const int pos = grid.arrangement[s][k];
      if (pos != m.i && pos != m.j) continue;
      const double dl = (x[k][s] - x[k][s - 1]) / (grid.ts[s] - grid.ts[s - 1]);
      const double dr = (x[k][s + 1] - x[k][s]) / (grid.ts[s + 1] - grid.ts[s]);
      worst = std::max(worst, std::abs(dr - dl));
    }
  }
  return worst;
}

GrowthReport peak_growth(const std::vector<double>& ts, const std::vector<std::vector<double>>& curves,
                         const std::vector<std::pair<int, double>>& marks, double half_width, int d) {
  if (d != 1 && d != 2) throw Error(Errc::PreconditionViolated, "peak_growth supports first and second differences");
  const double brk = 10 * median_step(ts);
  GrowthReport rep;
  for (const auto& [n, tm] : marks) {
    (void)n;
    double peak = 0;
    for (const auto& x : curves) {
      for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
        if (std::abs(ts[s] - tm) > half_width) continue;
        const double h1 = ts[s + 1] - ts[s];
        if (h1 > brk) continue;
        const double q1 = (x[s + 1] - x[s]) / h1;
        if (d == 1) {
          peak = std::max(peak, std::abs(q1));
          continue;
        }
        if (s == 0) continue;
        const double h0 = ts[s] - ts[s - 1];
        if (h0 > brk) continue;
        const double q0 = (x[s] - x[s - 1]) / h0;
        peak = std::max(peak, std::abs(2 * (q1 - q0) / (h0 + h1)));
      }
    }
    rep.peaks.push_back(peak);
  }
  rep.monotone = !rep.peaks.empty();
  for (std::size_t k = 1; k < rep.peaks.size(); ++k) rep.monotone = rep.monotone && rep.peaks[k] >= rep.peaks[k - 1];
  if (marks.size() >= 2) {
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < marks.size(); ++k) {
      if (rep.peaks[k] <= 0) continue;
      lx.push_back(std::log(static_cast<double>(marks[k].first)));
      ly.push_back(std::log(rep.peaks[k]));
    }
    if (lx.size() >= 2) rep.exponent = fit_slope(lx, ly);
  }
  rep.blowup = rep.monotone && rep.peaks.size() >= 2 && rep.peaks.back() > 4 * rep.peaks.front();
  return rep;
}

std::vector<double> quotient_spread(const std::vector<double>& ts, const std::vector<double>& x, double t0,
                                    double x0, double radius, int windows) {
  std::vector<double> out;
  for (int j = 0; j < windows; ++j) {
    const double r = std::ldexp(radius, -j);
    double mn = std::numeric_limits<double>::infinity(), mx = -mn;
    for (std::size_t s = 0; s < ts.size(); ++s) {
      const double d = std::abs(ts[s] - t0);
      if (d == 0 || d > r) continue;
      const double q = (x[s] - x0) / (ts[s] - t0);
      mn = std::min(mn, q);
      mx = std::max(mx, q);
    }
    if (mx >= mn) out.push_back(mx - mn);
  }
  return out;
}

}  // namespace smoothroots

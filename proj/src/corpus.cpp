#include "smoothroots/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "smoothroots/error.hpp"

namespace smoothroots::corpus {

namespace {

constexpr int kMaxBump = 1000;  // bumps beyond this are below double resolution

mpq_class pow_q(long base, int e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return mpq_class(z);
}

const std::vector<double>& marked_points() {
  static const std::vector<double> pts = [] {
    std::vector<double> v(kMaxBump + 1, 0.0);
    mpq_class prefix = 0;  // sum over k < n
    for (int n = 1; n <= kMaxBump; ++n) {
      const mpq_class tail = mpq_class(1, n * n) + mpq_class(1) / (n * pow_q(2, n + 1));
      v[static_cast<std::size_t>(n)] = mpq_class(prefix + tail).get_d();
      prefix += 2 * tail;
    }
    return v;
  }();
  return pts;
}

// Index of the bump whose support holds t, or 0.
int bump_at(double t) {
  const auto& pts = marked_points();
  const auto it = std::lower_bound(pts.begin() + 1, pts.end(), t);
  for (auto j : {it - pts.begin() - 1, it - pts.begin()}) {
    if (j < 1 || j > kMaxBump) continue;
    const int n = static_cast<int>(j);
    if (std::abs(t - pts[static_cast<std::size_t>(n)]) < half_width(n)) return n;
  }
  return 0;
}

std::string qstr(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

ReferenceValue ref(const std::string& name, int n, const mpq_class& q) { return {name, n, qstr(q), q.get_d()}; }

std::vector<double> default_log_grid() {
  std::vector<double> ts{0.0};
  for (int k = 2000; k >= 0; --k) ts.push_back(std::exp(-k / 200.0));
  return ts;
}

std::vector<double> ex77_grid() {
  std::vector<double> ts;
  for (int k = 21 * 200; k >= 200; --k) ts.push_back(200.0 / k);
  return ts;
}

SampledPoly sample_square(const std::vector<double>& ts, double (*f)(double)) {
  SampledPoly p;
  p.degree = 2;
  p.ts = ts;
  for (double t : ts) p.a.push_back({0.0, -f(t)});
  return p;
}

}  // namespace

double psi(double s) { return s > 0 ? std::exp(-1 / s) : 0.0; }

double h(double t) {
  if (t >= 0) return 1;
  if (t <= -1) return 0;
  const double a = psi(t + 1), b = psi(-t);
  return a / (a + b);
}

double plateau(int n) { return 1.0 / (n * std::ldexp(1.0, n + 1)); }
double half_width(int n) { return plateau(n) + 1.0 / (static_cast<double>(n) * n); }

double h_n(int n, double s) {
  const double n2 = static_cast<double>(n) * n, c = plateau(n);
  return h(n2 * (c + s)) * h(n2 * (c - s));
}

mpq_class t_n_exact(int n) {
  if (n < 1) throw Error(Errc::InputError, "marked points start at n = 1");
  mpq_class t = 0;
  for (int k = 1; k < n; ++k) t += mpq_class(2, k * k) + mpq_class(2) / (k * pow_q(2, k + 1));
  t += mpq_class(1, n * n) + mpq_class(1) / (n * pow_q(2, n + 1));
  t.canonicalize();
  return t;
}

double t_n(int n) { return n <= kMaxBump ? marked_points()[static_cast<std::size_t>(n)] : t_n_exact(n).get_d(); }

double ex24_f(double t) {
  const int n = bump_at(t);
  if (n == 0) return 0;
  const double s = t - t_n(n);
  return h_n(n, s) * (2.0 * n / std::ldexp(1.0, n) * s * s + std::ldexp(1.0, -2 * n));
}

double ex25_f(double t) {
  const int n = bump_at(t);
  if (n == 0) return 0;
  const double s = t - t_n(n);
  return h_n(n, s) * (n / std::ldexp(1.0, n) * s);
}

double ex25_eps(double t) {
  const int n = bump_at(t);
  if (n == 0) return 1;
  return 1 - h_n(n, t - t_n(n)) * std::ldexp(1.0, -3 * n);
}

double ex74_a(double t) {
  const int n = bump_at(t);
  if (n == 0) return 0;
  const double s = t - t_n(n);
  return h_n(n, s) * (2.0 * n / std::ldexp(1.0, n) * s + std::ldexp(1.0, -2 * n));
}

double ex74_b(double t) {
  const int n = bump_at(t);
  if (n == 0) return 0;
  const double s = t - t_n(n);
  return h_n(n, s) * (2.0 * n / std::ldexp(1.0, n) * s);
}

double ex23a(double t) {
  const double a = std::abs(t);
  if (a == 0) return 0;
  const double g = a * std::sin(std::log(a));
  return g * g;
}

double ex23b(double t) {
  if (t == 0) return 0;
  const double g = t * t * std::sin(1 / t);
  return g * g;
}

double ex23c(double t) {
  const double a = std::abs(t);
  if (a == 0) return 0;
  const double g = a * a * std::sin(std::log(a));
  return g * g;
}

double warner(double t) {
  if (t <= 0) return 0;
  const double s = std::sin(1 / t);
  return s * s * std::exp(-1 / t) + std::exp(-2 / t);
}

mpq_class ex25_b3_closed_form(int n) {
  const mpq_class fd = mpq_class(n) / pow_q(2, n);
  const mpq_class eps = 1 - 1 / pow_q(8, n);
  mpq_class r = fd * fd * fd * eps * (eps * eps - 3) / (eps * eps - 1);
  r.canonicalize();
  return r;
}

mpq_class ex25_b3_from_roots(int n) {
  const mpq_class fd = mpq_class(n) / pow_q(2, n);
  mpq_class r = fd * fd * fd * (1 - 1 / pow_q(8, n));
  r.canonicalize();
  return r;
}

std::vector<double> marked_grid(const CorpusParams& p) {
  std::vector<double> ts;
  for (int n = p.n_min; n <= p.n_max; ++n) {
    const double c = t_n(n);
    for (int k = -p.half_window; k <= p.half_window; ++k) ts.push_back(c + k * p.step);
  }
  return ts;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> v{"ex23a", "ex23b", "ex23c", "ex24", "ex25", "warner", "ex74", "ex77"};
  return v;
}

CorpusEntry make(const std::string& name, const CorpusParams& params) {
  if (std::find(names().begin(), names().end(), name) == names().end())
    throw Error(Errc::UnknownCorpusEntry, "'" + name + "'; known entries: ex23a ex23b ex23c ex24 ex25 warner ex74 ex77");
  if (params.n_min < 1 || params.n_max < params.n_min || params.n_max > kMaxBump)
    throw Error(Errc::InputError, "n range must satisfy 1 <= n_min <= n_max <= 1000");
  if (!(params.step > 0) || params.half_window < 1) throw Error(Errc::InputError, "step and window must be positive");
  for (int n = params.n_min; n < params.n_max; ++n)
    if (t_n(n) + params.half_window * params.step >= t_n(n + 1) - params.half_window * params.step)
      throw Error(Errc::InputError, "windows around neighbouring marked points overlap; lower step or half_window");
  for (std::size_t k = 1; k < params.grid.size(); ++k)
    if (!(params.grid[k] > params.grid[k - 1])) throw Error(Errc::InputError, "grid must be strictly increasing");

  CorpusEntry e;
  e.name = name;
  e.params = params;
  const bool marked = name == "ex24" || name == "ex25" || name == "ex74";
  std::vector<double> ts = params.grid;
  if (ts.empty()) ts = marked ? marked_grid(params) : name == "ex77" ? ex77_grid() : default_log_grid();
  if (marked)
    for (int n = params.n_min; n <= params.n_max; ++n) {
      e.marks.emplace_back(n, t_n(n));
      e.reference.push_back(ref("t_n", n, t_n_exact(n)));
    }

  if (name == "ex24") {
    e.description = "x^2 - f with f >= 0 smooth, flat where the bumps accumulate";
    e.expected = {"second differences of the square root grow without bound near lim t_n",
                  "meet at lim t_n classified FlatSuspect"};
    e.data = sample_square(ts, ex24_f);
    for (int n = params.n_min; n <= params.n_max; ++n) {
      e.reference.push_back(ref("f", n, 1 / pow_q(4, n)));
      e.reference.push_back(ref("f''", n, mpq_class(2 * n) / pow_q(2, n - 1)));
    }
  } else if (name == "ex25") {
    e.description = "x^3 + a_2 x - a_3 with -12 a_2 = f^2, 108 a_3 = eps f^3";
    e.expected = {"108 b_3(t_n) from the expanded closed form grows like n^3",
                  "108 b_3(t_n) from the roots is f'(t_n)^3 eps(t_n), which tends to 0"};
    SampledPoly p;
    p.degree = 3;
    p.ts = ts;
    for (double t : ts) {
      const double f = ex25_f(t), eps = ex25_eps(t);
      p.a.push_back({0.0, -f * f / 12, eps * f * f * f / 108});
    }
    e.data = std::move(p);
    for (int n = params.n_min; n <= params.n_max; ++n) {
      e.reference.push_back(ref("f'", n, mpq_class(n) / pow_q(2, n)));
      e.reference.push_back(ref("eps", n, 1 - 1 / pow_q(8, n)));
      e.reference.push_back(ref("108 b_3 closed form", n, ex25_b3_closed_form(n)));
      e.reference.push_back(ref("108 b_3 from roots", n, ex25_b3_from_roots(n)));
    }
    e.notes = {"eps is evaluated from its defining sum, so eps(t_n) = 1 - 8^-n rather than 8^-n",
               "the expanded closed form of b_3 disagrees with x1' x2' x3' computed from the roots; both are listed"};
  } else if (name == "ex74") {
    e.description = "[[a, b], [b, -a]] with eigenvalues +-sqrt(a^2 + b^2)";
    e.expected = {"eigenvalues arranged C^1", "second differences of the eigenvalues blow up near lim t_n"};
    SampledHermitian m;
    m.n = 2;
    m.ts = ts;
    for (double t : ts) {
      const double a = ex74_a(t), b = ex74_b(t);
      m.a.push_back({{a, b}, {b, -a}});
    }
    e.data = std::move(m);
    for (int n = params.n_min; n <= params.n_max; ++n) {
      e.reference.push_back(ref("a", n, 1 / pow_q(4, n)));
      e.reference.push_back(ref("b'", n, mpq_class(2 * n) / pow_q(2, n)));
      e.reference.push_back(ref("c''", n, mpq_class(4 * n * n)));
    }
  } else if (name == "ex77") {
    e.description = "exp(-1/t^2) [[cos 2/t, sin 2/t], [sin 2/t, -cos 2/t]]";
    e.expected = {"eigenvalues +-exp(-1/t^2)", "ContinuityObstruction for the eigenvectors as t -> 0"};
    SampledHermitian m;
    m.n = 2;
    m.ts = ts;
    for (double t : ts) {
      const double w = t == 0 ? 0 : std::exp(-1 / (t * t));
      const double c = t == 0 ? 1 : std::cos(2 / t), s = t == 0 ? 0 : std::sin(2 / t);
      m.a.push_back({{w * c, w * s}, {w * s, -w * c}});
    }
    e.data = std::move(m);
    for (int k = 1; k <= 20; ++k) e.windows.emplace_back(1.0 / (k + 1), 1.0 / k);
    for (int k = 1; k <= 21; ++k)
      e.reference.push_back({"lambda_+ at t = 1/k", k, "", std::exp(-static_cast<double>(k) * k)});
  } else if (name == "ex23a") {
    e.description = "x^2 - t^2 sin^2(log t)";
    e.expected = {"sign toggles at each zero e^{-k pi}", "difference quotient of the root at 0 keeps oscillating"};
    e.data = sample_square(ts, ex23a);
    for (int k = 1; k <= 3; ++k) e.reference.push_back({"zero", k, "", std::exp(-k * M_PI)});
  } else if (name == "ex23b") {
    e.description = "x^2 - t^4 sin^2(1/t)";
    e.expected = {"root differentiable at 0 but its derivative oscillates"};
    e.data = sample_square(ts, ex23b);
    for (int k = 1; k <= 10; ++k) e.reference.push_back({"zero", k, "", 1 / (k * M_PI)});
  } else if (name == "ex23c") {
    e.description = "x^2 - t^4 sin^2(log t)";
    e.expected = {"root C^1 at 0; second difference quotients keep oscillating"};
    e.data = sample_square(ts, ex23c);
    for (int k = 1; k <= 3; ++k) e.reference.push_back({"zero", k, "", std::exp(-k * M_PI)});
  } else {
    e.description = "x^2 - (sin^2(1/t) e^{-1/t} + e^{-2/t})";
    e.expected = {"positive for t > 0; second derivative of the root is discontinuous at 0"};
    e.data = sample_square(ts, warner);
  }
  return e;
}

}  // namespace smoothroots::corpus

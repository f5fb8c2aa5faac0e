#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace smoothroots::corpus {

// Smooth step: h = 0 for t <= -1, h = 1 for t >= 0, built from
// psi(s) = exp(-1/s) (s > 0) as psi(t+1) / (psi(t+1) + psi(-t)).
double psi(double s);
double h(double t);

// Bump centered at 0: 1 for |s| <= 1/(n 2^{n+1}), 0 for |s| >= that + 1/n^2.
double h_n(int n, double s);
double plateau(int n);    // 1/(n 2^{n+1})
double half_width(int n); // plateau(n) + 1/n^2

// Marked points, exactly.
mpq_class t_n_exact(int n);
double t_n(int n);

// Coefficient families, summed over the bump whose support holds t.
double ex24_f(double t);
double ex25_f(double t);
double ex25_eps(double t);
double ex74_a(double t);
double ex74_b(double t);
double ex23a(double t);
double ex23b(double t);
double ex23c(double t);
double warner(double t);

// 108 b_3(t_n) from the expanded closed form, and from the roots
// themselves (b_3 = x1' x2' x3' with x = f r(eps)), both exact.
mpq_class ex25_b3_closed_form(int n);
mpq_class ex25_b3_from_roots(int n);

using CMatrix = std::vector<std::vector<std::complex<double>>>;

// a[s] holds a_1..a_n in the convention x^n - a_1 x^{n-1} + a_2 x^{n-2} - ...
struct SampledPoly {
  int degree = 0;
  std::vector<double> ts;
  std::vector<std::vector<double>> a;
};

struct SampledHermitian {
  int n = 0;
  std::vector<double> ts;
  std::vector<CMatrix> a;
};

struct ReferenceValue {
  std::string name;
  int n = 0;          // index of the marked point, 0 if none
  std::string exact;  // rational string when known exactly
  double value = 0;
};

struct CorpusParams {
  int n_min = 1;
  int n_max = 6;
  double step = 1e-5;    // grid resolution near each marked point
  int half_window = 100; // samples on each side of a marked point
  std::vector<double> grid;  // overrides the default grid when nonempty
};

struct CorpusEntry {
  std::string name;
  std::string description;
  std::vector<std::string> expected;  // diagnostics the entry should trigger
  std::variant<SampledPoly, SampledHermitian> data;
  std::vector<std::pair<int, double>> marks;  // (n, t_n)
  std::vector<std::pair<double, double>> windows;  // for eigenvector angle variation
  std::vector<ReferenceValue> reference;
  std::vector<std::string> notes;
  CorpusParams params;
};

const std::vector<std::string>& names();
CorpusEntry make(const std::string& name, const CorpusParams& params = {});

// Samples t_n + k step, |k| <= half_window, for n_min <= n <= n_max.
std::vector<double> marked_grid(const CorpusParams& params);

}  // namespace smoothroots::corpus

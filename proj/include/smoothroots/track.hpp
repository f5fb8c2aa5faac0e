#pragma once

#include <complex>
#include <string>
#include <vector>

#include "smoothroots/factor.hpp"
#include "smoothroots/symmetric.hpp"

namespace smoothroots {

struct CurveSample {
  Scalar t;
  PolyCoeffs p;
};

// Samples P at each t; exact t on exact jets give exact coefficients.
std::vector<CurveSample> sample_curve(const PolyCurve& p, const std::vector<Scalar>& ts);

// "a:b:steps" -> steps + 1 equally spaced points from a to b.
std::vector<Scalar> parse_grid(const std::string& spec);

enum class GridMode { Ordered, Matched };

struct MeetEvent {
  int i = 0;  // ordered positions of the two curves, i < j
  int j = 0;
  double t = 0;
  int order_estimate = 1;
  bool flat_suspect = false;
  double slope = 0;  // raw log-log slope
  bool crossing = false;  // the arranged curves swap order here
};

struct TrackOptions {
  double imag_rel_tol = 1e-9;
  double meet_rel_tol = 1e-7;
  int window_steps = 16;  // half width of the meet regression window
  double flat_ceiling = 8;
};

struct RootGrid {
  GridMode mode = GridMode::Ordered;
  std::vector<double> ts;
  // Ordered mode: y_1 <= ... <= y_n per sample. Matched mode leaves this empty.
  std::vector<std::vector<double>> roots;
  std::vector<std::vector<std::complex<double>>> croots;
  // arrangement[s][k]: index into the sample's roots of arranged curve k.
  std::vector<std::vector<int>> arrangement;
  std::vector<MeetEvent> meets;
  std::vector<std::string> notes;

  int degree() const;
  int size() const { return static_cast<int>(ts.size()); }
  // x_k(t_s) = y_{sigma(t_s)(k)}(t_s)
  std::vector<std::vector<double>> arranged() const;
  std::vector<std::vector<std::complex<double>>> arranged_complex() const;
};

// Real roots of one sample, ascending. Throws NotRealRooted.
std::vector<double> real_roots(const PolyCoeffs& p, const TrackOptions& opts = {});

RootGrid ordered_roots(const std::vector<CurveSample>& samples, const TrackOptions& opts = {});
RootGrid ordered_roots(const std::vector<double>& ts, const std::vector<std::vector<double>>& roots);

MeetEvent classify_meet(const RootGrid& grid, int i, int j, double t_star, const TrackOptions& opts = {});

// Fills the arrangement and the meet list. Curves swap exactly where the
// sweep sees two of them cross; touching meets keep their order.
RootGrid differentiable_arrangement(RootGrid grid, const TrackOptions& opts = {});

// Complex roots matched between consecutive samples by minimum total
// displacement from each curve's linearly predicted position.
RootGrid matched_roots(const std::vector<CurveSample>& samples);

// Minimum-cost perfect matching; result[r] is the column assigned to row r.
std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost);

// Signed square root of f >= 0 whose sign flips at zeros of f with f'' > 0.
struct SqrtTrack {
  std::vector<double> x;
  std::vector<double> toggles;  // t of each sign change
};
SqrtTrack c1_sqrt_track(const std::vector<double>& ts, const std::vector<double>& f, const std::vector<double>& fpp,
                        double zero_tol = 1e-14, double fpp_tol = 1e-8);

// Worst f'(t)^2 / (2 f(t) max f''), the max taken over samples in
// t0 + r (t - t0), 0 <= r <= 2. f' is estimated by central differences
// unless given.
double sqrt_ratio_audit(const std::vector<double>& ts, const std::vector<double>& f, const std::vector<double>& fpp,
                     double t0, const std::vector<double>& fp = {});

// Diagnostics on arranged curves.

// Largest |x_k(t_{s+1}) - x_k(t_s)| over curves and samples.
double max_step(const RootGrid& grid);

// Max jump between left and right difference quotients at the samples
// nearest to each meet, over the curves involved.
double meet_jump(const RootGrid& grid);

// Peak |D^d x| (d = 1 or 2, divided differences) over all arranged curves
// within half_width of each mark. Differences spanning a grid gap larger
// than 10 times the median step are skipped.
struct GrowthReport {
  std::vector<double> peaks;
  bool monotone = false;
  double exponent = 0;  // slope of log peak against log mark index
  bool blowup = false;  // monotone and last peak > 4 x first
};
GrowthReport peak_growth(const std::vector<double>& ts, const std::vector<std::vector<double>>& curves,
                         const std::vector<std::pair<int, double>>& marks, double half_width, int d);

// Spread (max - min) of (x(t) - x(t0)) / (t - t0) over the nested windows
// 0 < |t - t0| <= 2^{-j} R, j = 0, 1, ...; empty windows are skipped. At a
// point of differentiability the spread tends to 0.
std::vector<double> quotient_spread(const std::vector<double>& ts, const std::vector<double>& x, double t0,
                                    double x0, double radius, int windows);

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace smoothroots

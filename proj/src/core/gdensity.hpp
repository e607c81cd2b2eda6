#pragma once

#include <complex>
#include <vector>

#include "core/log_poly.hpp"

namespace beurling {

using Complex = std::complex<double>;

// g(u) = sum_{n>=1} chi^{*n}(u) / n with chi the indicator of [e, e^2] and *
// multiplicative convolution. In w = log u, chi^{*n} is the cardinal B-spline
// of order n shifted to [n, 2n], so every table here is exact piecewise
// polynomial data on unit knots.
class GDensity {
 public:
  static constexpr int kDefaultCap = 64;

  explicit GDensity(int n_cap = kDefaultCap);

  // Shared immutable instance with the default cap (thread-safe init).
  static const GDensity& Default();

  int n_cap() const { return n_cap_; }
  // g is exact for w < w_limit() = n_cap + 1.
  double w_limit() const { return n_cap_ + 1.0; }

  // chi^{*n} in w, support [n, 2n]. Throws kRange outside 1..n_cap.
  const LogPiecewisePolynomial& ConvolutionPower(int n) const;

  // g in w on [0, n_cap + 1).
  const LogPiecewisePolynomial& Table() const { return g_; }

  // g(e^w): 0 for w < 1; throws kRange for w >= w_limit().
  double EvalLog(double w) const;
  double EvalLogLeft(double w) const;
  // d g(e^w) / dw.
  double DerivativeLog(double w) const;

 private:
  int n_cap_;
  std::vector<LogPiecewisePolynomial> powers_;
  LogPiecewisePolynomial g_;
};

// Operations on g in the u variable.
double EvalGDensity(double u);
// dg/du for u >= e^5 (kDomain below).
double EvalGDensityDerivative(double u);

struct MellinResult {
  Complex value;        // -int_1^inf g(u) u^{-z-1} du
  double tail_bound = 0.0;
  double w_cut = 0.0;
};
// Integrates piecewise over knots up to the first integer cut whose tail bound
// is <= tol. kDomain for Re z <= 0, kTolerance if no cut within the table
// suffices.
MellinResult MellinLogG(Complex z, double tol = 1e-9);

struct DecayWindow {
  double w_lo = 0.0, w_hi = 0.0;
  double max_error = 0.0;        // max |g(u) log u - 1|
  double max_scaled = 0.0;       // max of that times u^{(1/2) log(pi/2)}
  double max_deriv_scaled = 0.0; // max |(g log u)'| u^{1 + (1/2) log(pi/2)}
};

struct DecaySurvey {
  std::vector<DecayWindow> windows;  // unit windows in w
  double slope = 0.0;        // LSQ slope of log(window max_error) vs window centre
  double intercept = 0.0;
  bool scaled_stable = false;  // each window max <= 1.2 * running max after 3 windows
  bool deriv_stable = false;
};

// Samples [w_lo, w_hi] with samples_per_unit points per unit of w.
DecaySurvey SurveyDecay(double w_lo, double w_hi, int samples_per_unit = 400);

// -(1/2) log(pi/2)
double DecayExponent();

}  // namespace beurling

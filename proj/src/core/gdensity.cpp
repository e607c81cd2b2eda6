#include "core/gdensity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"
#include "core/quadrature.hpp"

namespace beurling {
namespace {

using Poly = std::vector<double>;

// Pieces of the cardinal B-spline of order n on [j, j+1], j = 0..n-1, via
// N_n(t) = [t N_{n-1}(t) + (n - t) N_{n-1}(t - 1)] / (n - 1).
// Both terms share the local variable tau = t - j, so no Taylor shifts occur.
std::vector<std::vector<Poly>> BSplineTables(int n_cap) {
  std::vector<std::vector<Poly>> tables(n_cap + 1);
  tables[1] = {Poly{1.0}};
  for (int n = 2; n <= n_cap; ++n) {
    const auto& prev = tables[n - 1];
    std::vector<Poly> cur(n, Poly(n, 0.0));
    const double inv = 1.0 / (n - 1);
    for (int j = 0; j < n; ++j) {
      Poly& out = cur[j];
      if (j <= n - 2) {
        // (j + tau) * prev[j]
        const Poly& a = prev[j];
        for (std::size_t i = 0; i < a.size(); ++i) {
          out[i] += j * a[i] * inv;
          out[i + 1] += a[i] * inv;
        }
      }
      if (j >= 1) {
        // (n - j - tau) * prev[j-1]
        const Poly& b = prev[j - 1];
        for (std::size_t i = 0; i < b.size(); ++i) {
          out[i] += (n - j) * b[i] * inv;
          out[i + 1] -= b[i] * inv;
        }
      }
    }
    tables[n] = std::move(cur);
  }
  return tables;
}

}  // namespace

double DecayExponent() { return -0.5 * std::log(std::numbers::pi / 2.0); }

GDensity::GDensity(int n_cap) : n_cap_(n_cap) {
  Require(n_cap >= 2 && n_cap <= 160, ErrorCode::kInvalidArgument,
          "n_cap must lie in [2, 160]");
  const auto tables = BSplineTables(n_cap);
  powers_.reserve(n_cap);
  for (int n = 1; n <= n_cap; ++n) {
    std::vector<double> knots(n + 1);
    for (int j = 0; j <= n; ++j) knots[j] = n + j;
    powers_.emplace_back(std::move(knots), tables[n]);
  }
  // g on [m, m+1): n with n <= m <= 2n - 1.
  std::vector<double> knots(n_cap + 2);
  std::vector<Poly> pieces(n_cap + 1);
  for (int m = 0; m <= n_cap + 1; ++m) knots[m] = m;
  for (int m = 0; m <= n_cap; ++m) {
    Poly acc(std::max(1, m), 0.0);
    for (int n = (m + 2) / 2; n <= m; ++n) {
      const Poly& piece = tables[n][m - n];
      for (std::size_t i = 0; i < piece.size(); ++i) acc[i] += piece[i] / n;
    }
    pieces[m] = std::move(acc);
  }
  g_ = LogPiecewisePolynomial(std::move(knots), std::move(pieces));
}

const GDensity& GDensity::Default() {
  static const GDensity instance;
  return instance;
}

const LogPiecewisePolynomial& GDensity::ConvolutionPower(int n) const {
  Require(n >= 1 && n <= n_cap_, ErrorCode::kRange,
          "convolution power out of range: " + std::to_string(n));
  return powers_[n - 1];
}

double GDensity::EvalLog(double w) const {
  if (w < 1.0) return 0.0;
  Require(w < w_limit(), ErrorCode::kRange, "g evaluated beyond its table");
  return g_.Eval(w);
}

double GDensity::EvalLogLeft(double w) const {
  if (w <= 1.0) return 0.0;
  Require(w <= w_limit(), ErrorCode::kRange, "g evaluated beyond its table");
  return g_.EvalLeft(w);
}

double GDensity::DerivativeLog(double w) const {
  if (w < 1.0) return 0.0;
  Require(w < w_limit(), ErrorCode::kRange, "g evaluated beyond its table");
  return g_.Derivative(w);
}

double EvalGDensity(double u) {
  Require(u >= 1.0, ErrorCode::kDomain, "g(u) needs u >= 1");
  return GDensity::Default().EvalLog(std::log(u));
}

double EvalGDensityDerivative(double u) {
  Require(u >= std::exp(5.0) * (1.0 - 1e-15), ErrorCode::kDomain,
          "g'(u) is only defined for u >= e^5");
  return GDensity::Default().DerivativeLog(std::log(u)) / u;
}

MellinResult MellinLogG(Complex z, double tol) {
  Require(z.real() > 0.0, ErrorCode::kDomain, "Mellin form of log G needs Re z > 0");
  const GDensity& g = GDensity::Default();
  const auto& table = g.Table();
  const int last = g.n_cap() + 1;
  // sup of g(e^w) w over [W, last), then bounded by the table sup (g w -> 1).
  std::vector<double> sup_from(last + 1, 1.0);
  for (int m = last - 1; m >= 1; --m) {
    double s = 0.0;
    for (int i = 0; i <= 32; ++i) {
      const double w = m + i / 32.0 * (1.0 - 1e-12);
      s = std::max(s, table.Eval(w) * w);
    }
    sup_from[m] = std::max(sup_from[m + 1], s);
  }
  int cut = -1;
  double tail = 0.0;
  for (int w = 8; w <= last; ++w) {
    const double bound = 1.01 * sup_from[std::min(w, last)] / w *
                         std::exp(-z.real() * w) / z.real();
    if (bound <= tol) {
      cut = w;
      tail = bound;
      break;
    }
  }
  Require(cut > 0, ErrorCode::kTolerance,
          "Mellin tail bound above tolerance at the table limit");
  Complex sum = 0.0;
  for (int m = 1; m < cut; ++m) {
    const auto& piece = table.pieces()[m];
    sum += std::exp(-z * static_cast<double>(m)) *
           quad::PolyExpIntegral(piece, z, 1.0);
  }
  return {-sum, tail, static_cast<double>(cut)};
}

DecaySurvey SurveyDecay(double w_lo, double w_hi, int samples_per_unit) {
  Require(w_hi > w_lo && w_lo >= 2.0, ErrorCode::kInvalidArgument,
          "decay survey window must satisfy 2 <= w_lo < w_hi");
  const GDensity& g = GDensity::Default();
  Require(w_hi < g.w_limit(), ErrorCode::kRange, "decay survey beyond table");
  const double c = -DecayExponent();
  DecaySurvey out;
  for (double a = w_lo; a < w_hi - 1e-12; a += 1.0) {
    DecayWindow win;
    win.w_lo = a;
    win.w_hi = std::min(a + 1.0, w_hi);
    const int n = std::max(2, static_cast<int>(samples_per_unit * (win.w_hi - win.w_lo)));
    for (int i = 0; i < n; ++i) {
      // Offset by half a step to stay off integer knots.
      const double w = win.w_lo + (i + 0.5) * (win.w_hi - win.w_lo) / n;
      const double gv = g.EvalLog(w);
      const double err = std::abs(gv * w - 1.0);
      win.max_error = std::max(win.max_error, err);
      win.max_scaled = std::max(win.max_scaled, err * std::exp(c * w));
      if (w >= 5.0) {
        // (g(u) log u)' in u, times u^{1+c}: |d(g w)/dw| e^{c w}
        const double d = g.DerivativeLog(w) * w + gv;
        win.max_deriv_scaled = std::max(win.max_deriv_scaled, std::abs(d) * std::exp(c * w));
      }
    }
    out.windows.push_back(win);
  }
  // Regression on windows starting at w >= 5 when available.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (const auto& win : out.windows) {
    if (win.w_lo < std::min(5.0, w_hi - 2.0)) continue;
    const double x = 0.5 * (win.w_lo + win.w_hi);
    const double y = std::log(win.max_error);
    sx += x; sy += y; sxx += x * x; sxy += x * y; ++cnt;
  }
  if (cnt >= 2) {
    out.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    out.intercept = (sy - out.slope * sx) / cnt;
  }
  auto stable = [&](auto field, double from) {
    double running = 0.0;
    int seen = 0;
    for (const auto& win : out.windows) {
      if (win.w_lo < from) continue;
      const double v = win.*field;
      if (seen >= 3 && v > 1.2 * running) return false;
      running = std::max(running, v);
      ++seen;
    }
    return seen > 3;
  };
  out.scaled_stable = stable(&DecayWindow::max_scaled, w_lo);
  out.deriv_stable = stable(&DecayWindow::max_deriv_scaled, std::max(w_lo, 5.0));
  return out;
}

}  // namespace beurling

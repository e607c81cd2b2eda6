#include "core/system.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "core/error.hpp"
#include "core/gdensity.hpp"

namespace beurling {
namespace {

constexpr double kMaxExp = 709.0;

// Sum of the oscillating terms; `left` selects left limits of g.
double OscillatingSum(double w, const DensitySpec& spec, bool left) {
  const GDensity& g = GDensity::Default();
  const int active = ActiveTermCount(w, spec);
  double sum = 0.0;
  for (int k = 1; k <= active; ++k) {
    const double lk = SystemParams::L(k);
    const double s = w / lk;
    const double gv = left ? g.EvalLogLeft(s) : g.EvalLog(s);
    if (gv == 0.0) continue;
    sum += gv / lk * std::exp(-s) * std::cos(spec.params.Gamma(k) * w);
  }
  return 2.0 * sum;
}

double MainTerm(double w) {
  if (w == 0.0) return 1.0;
  return -std::expm1(-w) / w;
}

}  // namespace

double SystemParams::L(int k) { return std::ldexp(1.0, 2 * k); }

double SystemParams::Gamma(int k) const {
  if (k >= 1 && k <= static_cast<int>(gamma.size())) return gamma[k - 1];
  const double e = std::pow(4.0, beta * k);
  Require(e < kMaxExp, ErrorCode::kRange, "gamma_k overflows double precision");
  return std::exp(e);
}

Complex SystemParams::Rho(int k) const {
  return {1.0 - 1.0 / L(k), Gamma(k)};
}

int SystemParams::MaxRepresentableK() const {
  int k = 1;
  while (std::pow(4.0, beta * (k + 1)) < kMaxExp) ++k;
  return k;
}

SystemParams MakeParams(double beta, int K) {
  Require(beta > 0.0 && beta < 1.0, ErrorCode::kInvalidArgument,
          "beta must lie in (0, 1)");
  Require(K >= 1, ErrorCode::kInvalidArgument, "K must be >= 1");
  SystemParams p;
  p.beta = beta;
  p.K = K;
  Require(std::pow(4.0, beta * K) < kMaxExp, ErrorCode::kInvalidArgument,
          "gamma_K = exp(4^{beta K}) overflows double precision");
  for (int k = 1; k <= K; ++k) {
    p.l.push_back(SystemParams::L(k));
    p.gamma.push_back(std::exp(std::pow(4.0, beta * k)));
    p.rho.emplace_back(1.0 - 1.0 / p.l.back(), p.gamma.back());
  }
  // 3 gamma_k < gamma_{k+1}  <=>  4^{beta k} (4^beta - 1) > log 3; the left
  // side increases in k, so the first k that passes holds for all later k.
  int k = 1;
  while (std::pow(4.0, beta * k) * (std::pow(4.0, beta) - 1.0) <= std::log(3.0)) ++k;
  p.k_beta = k;
  return p;
}

double Li(double x) {
  Require(x >= 1.0, ErrorCode::kDomain, "Li(x) needs x >= 1");
  if (x == 1.0) return 0.0;
  // In w = log u: int_0^{log x} (e^w - 1)/w dw.
  auto f = [](double w) { return w == 0.0 ? 1.0 : std::expm1(w) / w; };
  const double W = std::log(x);
  double total = 0.0;
  // Unit segments keep the adaptive rule well scaled for large x.
  for (double a = 0.0; a < W; a += 4.0)
    total += quad::Adaptive(f, a, std::min(W, a + 4.0), 1e-14).value;
  return total;
}

int ActiveTermCount(double w, const DensitySpec& spec) {
  int k = 0;
  while (SystemParams::L(k + 1) <= w) {
    ++k;
    if (spec.mode == DensityMode::kTruncated && k >= spec.params.K) break;
  }
  return k;
}

double DensityLog(double w, const DensitySpec& spec) {
  Require(w >= 0.0, ErrorCode::kDomain, "density needs v >= 1");
  return MainTerm(w) - OscillatingSum(w, spec, false);
}

double DensityLogMidpoint(double w, const DensitySpec& spec) {
  Require(w >= 0.0, ErrorCode::kDomain, "density needs v >= 1");
  return MainTerm(w) -
         0.5 * (OscillatingSum(w, spec, false) + OscillatingSum(w, spec, true));
}

double Density(double v, const DensitySpec& spec) {
  Require(v >= 1.0, ErrorCode::kDomain, "density needs v >= 1");
  return DensityLog(std::log(v), spec);
}

std::vector<double> DensityKnots(double w_lo, double w_hi, const DensitySpec& spec) {
  std::vector<double> knots;
  const int active = ActiveTermCount(w_hi, spec);
  for (int k = 1; k <= active; ++k)
    quad::AppendMultiples(w_lo, w_hi, SystemParams::L(k), knots);
  return knots;
}

double OscillationPanelWidth(double w_hi, const DensitySpec& spec,
                             double extra_frequency) {
  const int active = ActiveTermCount(w_hi, spec);
  const double gmax = active > 0 ? spec.params.Gamma(active) : 0.0;
  const double freq = gmax + std::abs(extra_frequency);
  if (freq <= 0.0) return 0.25;
  return std::min(0.25, std::numbers::pi / (4.0 * freq));
}

quad::Result<double> PiC(double x, const DensitySpec& spec) {
  Require(x >= 1.0, ErrorCode::kDomain, "Pi_C(x) needs x >= 1");
  if (x == 1.0) return {0.0, 0.0};
  const double W = std::log(x);
  const auto breaks = quad::Breakpoints(0.0, W, DensityKnots(0.0, W, spec));
  auto integrand = [&](double w) { return DensityLog(w, spec) * std::exp(w); };
  auto r = quad::IntegratePanels<double>(integrand, breaks,
                                         OscillationPanelWidth(W, spec));
  Require(r.error <= 1e-8 * std::max(1.0, r.value), ErrorCode::kTolerance,
          "Pi_C quadrature error above tolerance");
  return r;
}

DeltaReport ChebyshevDelta(const DensitySpec& spec, std::span<const double> v_grid) {
  DeltaReport rep;
  rep.min_density = std::numeric_limits<double>::infinity();
  for (double v : v_grid) {
    Require(v >= std::exp(4.0) * (1.0 - 1e-14), ErrorCode::kDomain,
            "Chebyshev grid must lie in [e^4, inf)");
    const double w = std::log(v);
    const double f = DensityLog(w, spec);
    const double d = std::abs(f * w / (-std::expm1(-w)) - 1.0);
    if (d > rep.delta) {
      rep.delta = d;
      rep.argmax_v = v;
    }
    rep.min_density = std::min(rep.min_density, f);
  }
  if (rep.delta >= 1.0) {
    std::ostringstream msg;
    msg << "Chebyshev constant " << rep.delta << " >= 1 at v = " << rep.argmax_v;
    Fail(ErrorCode::kTolerance, msg.str());
  }
  return rep;
}

std::vector<double> LogSpacedGrid(double w_lo, double w_hi, int n) {
  std::vector<double> out;
  if (n == 1) return {std::exp(w_lo)};
  for (int i = 0; i < n; ++i)
    out.push_back(std::exp(w_lo + (w_hi - w_lo) * i / (n - 1)));
  return out;
}

}  // namespace beurling

#include "core/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/gdensity.hpp"
#include "core/parallel.hpp"
#include "core/zeta.hpp"

namespace beurling {
namespace {

double Median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    m = 0.5 * (m + lower);
  }
  return m;
}

IkValue IkQuadrature(const SystemParams& params, int k, double log_x) {
  const double lk = SystemParams::L(k);
  const double gk = params.Gamma(k);
  const GDensity& g = GDensity::Default();
  Require(log_x / lk < g.w_limit(), ErrorCode::kRange, "I_k beyond the g table");
  std::vector<double> knots;
  quad::AppendMultiples(lk, log_x, lk, knots);
  const auto breaks = quad::Breakpoints(lk, log_x, knots);
  const double a = 1.0 - 1.0 / lk;
  auto f = [&](double w) {
    const double s = w / lk;
    return s * g.EvalLog(s) * std::exp(a * w) * std::cos(gk * w);
  };
  const auto r = quad::IntegratePanels<double>(
      f, breaks, std::min(0.25, std::numbers::pi / (4.0 * gk)));
  return {k, r.value, r.error, IkMethod::kQuadrature};
}

}  // namespace

const char* IkMethodName(IkMethod m) {
  return m == IkMethod::kQuadrature ? "quadrature" : "asymptotic";
}

int LevelOf(double log_x) {
  int K = 0;
  while (SystemParams::L(K + 1) <= log_x) ++K;
  return K;
}

IkValue Ik(const SystemParams& params, int k, double log_x, IkMethod method, bool strict) {
  Require(k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
  const double lk = SystemParams::L(k);
  Require(log_x >= lk, ErrorCode::kDomain, "I_k needs x >= e^{4^k}");
  if (method == IkMethod::kQuadrature) {
    if (log_x == lk) return {k, 0.0, 0.0, method};
    return IkQuadrature(params, k, log_x);
  }
  Require(!strict || k <= LevelOf(log_x) - 2, ErrorCode::kDomain,
          "asymptotic I_k is only valid for k <= K - 2");
  const double gk = params.Gamma(k);
  const double lead = std::exp(log_x * (1.0 - 1.0 / lk)) / gk;
  const double c = 1.0 + 0.5 * std::log(std::numbers::pi / 2.0);
  const double unc = std::exp(5.0 * log_x / 16.0) +
                     (std::exp(log_x * (1.0 - c / lk)) + lead) / gk;
  return {k, lead * std::sin(gk * log_x), unc, method};
}

PsiCValue PsiC(const SystemParams& params, double log_x, IkMethod method) {
  Require(log_x >= 0.0, ErrorCode::kDomain, "psi_C needs x >= 1");
  PsiCValue out;
  out.log_x = log_x;
  const int level = LevelOf(log_x);
  std::vector<double> parts;
  for (int k = 1; k <= level; ++k) {
    const IkMethod m = (method == IkMethod::kAsymptotic && k <= level - 2)
                           ? IkMethod::kAsymptotic
                           : IkMethod::kQuadrature;
    out.terms.push_back(Ik(params, k, log_x, m));
    parts.push_back(out.terms.back().value);
    out.uncertainty += 2.0 * out.terms.back().uncertainty;
  }
  out.F = PairwiseSum(parts);
  out.psiC = std::expm1(log_x) - log_x - 2.0 * out.F;
  return out;
}

Envelope EnvelopeAt(double beta, double log_x) {
  Require(beta > 0.0 && beta <= 1.0, ErrorCode::kInvalidArgument, "beta must lie in (0, 1]");
  Require(log_x > 0.0, ErrorCode::kDomain, "envelope needs x > 1");
  Envelope e;
  e.lambda_max = std::pow(log_x / beta, 1.0 / (beta + 1.0));
  e.mu = std::log(e.lambda_max) / std::log(4.0);
  const double r = std::round(e.mu);
  if (std::abs(e.mu - r) < 1e-12) e.mu = r;
  e.k0 = static_cast<int>(std::floor(e.mu));
  e.log_E = log_x - std::pow(beta, -beta / (beta + 1.0)) * (beta + 1.0) *
                        std::pow(log_x, beta / (beta + 1.0));
  e.E = std::exp(e.log_E);
  return e;
}

DominantTerms ClassifyDominantTerms(const SystemParams& params, double log_x, bool strict) {
  DominantTerms d;
  d.env = EnvelopeAt(params.beta, log_x);
  d.mu_frac = d.env.mu - d.env.k0;
  d.precondition_met = d.env.lambda_max < std::pow(4.0, params.K - 2);
  Require(!strict || d.precondition_met, ErrorCode::kDomain,
          "dominant terms need lambda_max < 4^{K-2}");
  if (d.mu_frac <= 1.0 / 3.0) d.dominant = Dominance::kLower;
  else if (d.mu_frac < 2.0 / 3.0) d.dominant = Dominance::kNeither;
  else d.dominant = Dominance::kUpper;
  auto amplitude = [&](int k) {
    if (k < 1) return 0.0;
    return std::exp(log_x * (1.0 - std::pow(4.0, -k)) - std::pow(4.0, params.beta * k) -
                    d.env.log_E);
  };
  d.predicted_lower = amplitude(d.env.k0);
  d.predicted_upper = amplitude(d.env.k0 + 1);
  return d;
}

OscillationScan ScanOscillation(const SystemParams& params, double log_x_center,
                                double half_width, int threads) {
  Require(half_width > 0.0, ErrorCode::kInvalidArgument, "half width must be positive");
  Require(log_x_center - half_width > 0.0, ErrorCode::kDomain, "window must lie above x = 1");
  const Envelope centre = EnvelopeAt(params.beta, log_x_center);
  double step = 2.0 * half_width / 64.0;
  if (centre.k0 >= 1)
    step = std::min(step, 2.0 * std::numbers::pi / params.Gamma(centre.k0) / 64.0);
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * half_width / step)) + 1;
  OscillationScan scan;
  scan.step = 2.0 * half_width / static_cast<double>(n - 1);
  scan.records.resize(n);
  ParallelFor(n, threads, [&](std::size_t i) {
    const double L = log_x_center - half_width + scan.step * static_cast<double>(i);
    const PsiCValue p = PsiC(params, L, IkMethod::kAsymptotic);
    const Envelope env = EnvelopeAt(params.beta, L);
    OscillationRecord& r = scan.records[i];
    r.log_x = L;
    r.psiC = p.psiC;
    r.F_terms = p.terms;
    r.E = env.E;
    r.ratio = (1.0 + L + 2.0 * p.F) * std::exp(-env.log_E);
    r.k0 = env.k0;
    r.mu_frac = env.mu - env.k0;
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (scan.records[i].ratio > scan.records[scan.argmax].ratio) scan.argmax = i;
    if (scan.records[i].ratio < scan.records[scan.argmin].ratio) scan.argmin = i;
  }
  return scan;
}

OscillationRecord OscillationSearch(const SystemParams& params, double log_x_center,
                                    double half_width, int target_sign, int threads) {
  Require(target_sign == 1 || target_sign == -1, ErrorCode::kInvalidArgument,
          "target sign must be +1 or -1");
  const OscillationScan scan = ScanOscillation(params, log_x_center, half_width, threads);
  return scan.records[target_sign > 0 ? scan.argmax : scan.argmin];
}

std::vector<PsiBridgeRow> PsiBridge(const PrimeSequence& P, const SystemParams& params,
                                    std::span<const double> xs, int threads) {
  std::vector<PsiBridgeRow> rows(xs.size());
  ParallelFor(xs.size(), threads, [&](std::size_t i) {
    const double x = xs[i];
    Require(x > 1.0, ErrorCode::kDomain, "psi bridge needs x > 1");
    PsiBridgeRow& r = rows[i];
    r.x = x;
    r.psi = Psi(P, x);
    r.psiC = PsiC(params, std::log(x), IkMethod::kQuadrature).psiC;
    r.normalized = std::abs(r.psi - r.psiC) / (std::sqrt(x) * std::log(x));
  });
  return rows;
}

NErrorProfile NErrorProfileRun(const PrimeSequence& P, double a_hat, double beta,
                               std::span<const double> xs, double horizon, int threads) {
  NErrorProfile out;
  for (double x : xs) {
    NErrorRow r;
    r.x = x;
    r.N = static_cast<double>(CountN(P, x, horizon, threads));
    r.rel_error = (r.N - a_hat * x) / x;
    out.rows.push_back(r);
  }
  if (out.rows.empty()) return out;
  // Trailing one-decade windows [10^{d-1}, 10^d], closed at both ends so the
  // grid endpoint is not left alone in a bin of its own.
  const int d_lo = static_cast<int>(std::ceil(std::log10(out.rows.front().x) - 1e-12));
  const int d_hi = static_cast<int>(std::floor(std::log10(out.rows.back().x) + 1e-12));
  for (int d = d_lo + 1; d <= d_hi; ++d) {
    std::vector<double> vals;
    for (const auto& r : out.rows) {
      const double ld = std::log10(r.x);
      if (ld >= d - 1 - 1e-12 && ld <= d + 1e-12) vals.push_back(std::abs(r.rel_error));
    }
    if (vals.empty()) continue;
    out.decade_lo.push_back(std::pow(10.0, d - 1));
    out.decade_median.push_back(Median(vals));
  }
  out.medians_decreasing = out.decade_median.size() >= 2;
  for (std::size_t i = 1; i < out.decade_median.size(); ++i)
    if (out.decade_median[i] > out.decade_median[i - 1]) out.medians_decreasing = false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : out.rows) {
    if (r.rel_error == 0.0 || r.x <= 1.0) continue;
    const double u = std::pow(std::log(r.x), beta);
    const double v = std::log(std::abs(r.rel_error));
    sx += u; sy += v; sxx += u * u; sxy += u * v; ++n;
  }
  if (n >= 2) {
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    out.c_hat = -slope;
    out.intercept = (sy - slope * sx) / n;
  }
  return out;
}

PerronResult PerronCheck(const ZetaFunction& zeta, const GridFunction& N, double x,
                         double kappa, double T, double dt) {
  Require(kappa > 1.0, ErrorCode::kInvalidArgument, "kappa must exceed 1");
  Require(x > 1.0 && T > 0.0 && dt > 0.0, ErrorCode::kInvalidArgument,
          "Perron check needs x > 1, T > 0, dt > 0");
  const double L = std::log(x);
  Require(N.h * static_cast<double>(N.values.size()) >= L, ErrorCode::kRange,
          "grid N does not reach x");
  PerronResult out;
  {
    std::vector<double> parts;
    for (std::size_t j = 0; j < N.values.size(); ++j) {
      const double a = std::exp(N.h * static_cast<double>(j));
      if (a >= x) break;
      const double b = std::min(x, std::exp(N.h * static_cast<double>(j + 1)));
      parts.push_back(N.values[j] * (b - a));
    }
    out.lhs = PairwiseSum(parts);
  }
  const auto n = static_cast<std::size_t>(std::ceil(T / dt));
  out.step = T / static_cast<double>(n);
  auto integrand = [&](double t) {
    const Complex s{kappa, t};
    return (zeta(s) * std::exp((s + 1.0) * L) / (s * (s + 1.0))).real();
  };
  constexpr std::size_t kChunk = 1 << 14;
  std::vector<double> chunks;
  for (std::size_t lo = 0; lo <= n; lo += kChunk) {
    double acc = 0.0;
    for (std::size_t i = lo; i < std::min(n + 1, lo + kChunk); ++i) {
      const double wgt = (i == 0 || i == n) ? 0.5 : 1.0;
      acc += wgt * integrand(out.step * static_cast<double>(i));
    }
    chunks.push_back(acc);
  }
  out.rhs = PairwiseSum(chunks) * out.step / std::numbers::pi;
  out.tail = std::abs(zeta({kappa, 0.0})) * std::exp((kappa + 1.0) * L) / (std::numbers::pi * T);
  out.gap = std::abs(out.lhs - out.rhs);
  out.relative = (out.gap + out.tail) / out.lhs;
  return out;
}

PerronResult PerronCheck(const SystemParams& params, int K, double x, double kappa,
                         double T, double h, double dt) {
  Require(K >= 1, ErrorCode::kInvalidArgument, "K must be >= 1");
  DensitySpec spec{params, DensityMode::kTruncated};
  spec.params.K = K;
  const double W = std::log(x) + 2.0 * h;
  const MixedMeasure m = ContinuousMeasure(spec, h, W);
  const GridFunction N = ExpStar(m, W, h);
  return PerronCheck([&](Complex s) { return ZetaCK(params, K, s); }, N, x, kappa, T, dt);
}

}  // namespace beurling

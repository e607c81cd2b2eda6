#include "core/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/complex_g.hpp"
#include "core/error.hpp"
#include "core/gdensity.hpp"
#include "core/parallel.hpp"

namespace beurling {
namespace {

// log of the full residue prod_k |G(1 - i l_k gamma_k)|^2; terms fall below
// 1e-18 long before gamma_k overflows.
double LogResidueFull(const SystemParams& params) {
  double total = 0.0;
  for (int k = 1;; ++k) {
    double gk;
    try {
      gk = params.Gamma(k);
    } catch (const Error&) {
      break;
    }
    const double term = 2.0 * gfun::LogG({1.0, SystemParams::L(k) * gk}).real();
    total += term;
    if (std::abs(term) < 1e-18) break;
  }
  return total;
}

DensitySpec TruncatedAt(const DensitySpec& spec, int K) {
  DensitySpec out = spec;
  out.mode = DensityMode::kTruncated;
  out.params.K = K;
  return out;
}

}  // namespace

ZetaValue ZetaFromMeasure(const MixedMeasure& m, Complex s) {
  std::vector<Complex> terms;
  terms.reserve(m.atoms.size());
  for (const Atom& a : m.atoms) terms.push_back(a.weight * std::exp(-s * std::log(a.location)));
  Complex log_value = PairwiseSum(terms);
  double error = 0.0;
  if (!m.density.empty()) {
    const double sigma = s.real();
    Require(sigma > 1.0, ErrorCode::kDomain,
            "measure with a density tail needs Re s > 1");
    log_value += quad::FilonSimpson(m.density, m.w_start, m.h, 1.0 - s);
    const double we = std::max(m.w_end(), 1.0);
    error = 2.0 / we * std::exp(we * (1.0 - sigma)) / (sigma - 1.0);
  }
  return {std::exp(log_value), log_value, error, 0};
}

ZetaValue ZetaCProduct(const SystemParams& params, Complex s, double tol) {
  Require(s.real() >= 1.0, ErrorCode::kDomain, "zeta_C product needs Re s >= 1");
  Require(s != Complex(1.0, 0.0), ErrorCode::kDomain, "zeta_C has a pole at s = 1");
  const double sigma = s.real();
  const double at = std::abs(s.imag());
  Complex log_value = std::log(s / (s - 1.0));
  for (int k = 1;; ++k) {
    const double lk = SystemParams::L(k);
    const Complex rho = params.Rho(k);
    log_value += gfun::LogG(lk * (s - rho)) + gfun::LogG(lk * (s - std::conj(rho)));
    // Tail over j > k: |log G| <= eps/(1 - eps) with
    // eps_j <= (e^{-x} + e^{-2x}) / (l_j (gamma_j - |t|)), x = l_j(sigma - 1) + 1
    // nondecreasing in j, and l_j quadrupling.
    double gnext;
    try {
      gnext = params.Gamma(k + 1);
    } catch (const Error&) {
      return {std::exp(log_value), log_value, 0.0, k};
    }
    if (gnext < 2.0 * at) continue;
    const double ln = SystemParams::L(k + 1);
    const double x = ln * (sigma - 1.0) + 1.0;
    const double eps = (std::exp(-x) + std::exp(-2.0 * x)) / (ln * (gnext - at));
    const double tail = 2.0 * (4.0 / 3.0) * eps / (1.0 - eps);
    if (eps < 0.1 && tail <= tol) return {std::exp(log_value), log_value, tail, k};
    if (k > 64) break;
  }
  Fail(ErrorCode::kTolerance, "zeta_C product tail not certified");
}

Complex ZetaCK(const SystemParams& params, int K, Complex s) {
  Require(s != Complex(1.0, 0.0), ErrorCode::kDomain, "zeta_{C,K} has a pole at s = 1");
  Require(K >= 0, ErrorCode::kInvalidArgument, "K must be >= 0");
  Complex value = s / (s - 1.0);
  for (int k = 1; k <= K; ++k) {
    const double lk = SystemParams::L(k);
    const Complex rho = params.Rho(k);
    value *= gfun::EvalG(lk * (s - rho)) * gfun::EvalG(lk * (s - std::conj(rho)));
  }
  return value;
}

double ResidueAK(const SystemParams& params, int K) {
  Require(K >= 0, ErrorCode::kInvalidArgument, "K must be >= 0");
  double value = 1.0;
  for (int k = 1; k <= K; ++k)
    value *= std::norm(gfun::EvalG({1.0, -SystemParams::L(k) * params.Gamma(k)}));
  return value;
}

quad::Result<double> DensityAContinuous(const SystemParams& params, int K) {
  Require(K >= 0, ErrorCode::kInvalidArgument, "K must be >= 0");
  double log_a = 0.0;
  double err = 0.0;
  for (int k = 1; k <= K; ++k) {
    const Complex z{1.0, SystemParams::L(k) * params.Gamma(k)};
    const MellinResult r = MellinLogG(z, 1e-14);
    log_a += 2.0 * r.value.real();
    err += 2.0 * r.tail_bound + 1e-15;
  }
  const double a = std::exp(log_a);
  return {a, a * err};
}

quad::Result<double> DensityA(const PrimeSequence& P, const DensitySpec& spec, double H) {
  Require(H > 1.0 && H <= P.x_max * (1.0 + 1e-12), ErrorCode::kDomain,
          "density_a horizon must lie in (1, x_max]");
  std::vector<double> terms;
  for (double p : P.primes) {
    if (p > H) break;
    terms.push_back(-std::log1p(-1.0 / p));
  }
  const double prime_sum = PairwiseSum(terms);
  const double W = std::log(H);
  const auto breaks = quad::Breakpoints(0.0, W, DensityKnots(0.0, W, spec));
  const auto integral = quad::IntegratePanels<double>(
      [&](double w) { return DensityLog(w, spec); }, breaks,
      OscillationPanelWidth(W, spec));
  const double log_aC = spec.mode == DensityMode::kTruncated
                            ? std::log(ResidueAK(spec.params, spec.params.K))
                            : LogResidueFull(spec.params);
  const double a = std::exp(prime_sum - integral.value + log_aC);
  return {a, a * (3.0 / H + integral.error)};
}

GapEvaluator::GapEvaluator(const PrimeSequence& P, const DensitySpec& spec, int K)
    : spec_(TruncatedAt(spec, K)), K_(K) {
  Require(K >= 1, ErrorCode::kInvalidArgument, "K must be >= 1");
  const double w_cross = SystemParams::L(K + 1);
  truncated_ = std::log(P.x_max) < w_cross;
  crossover_ = truncated_ ? P.x_max : std::exp(w_cross);
  for (double p : P.primes) {
    if (p >= crossover_) break;
    const double lp = std::log(p);
    prime_logs_.push_back(lp);
    int nu = 2;
    for (double pw = p * p; pw < crossover_; pw *= p, ++nu)
      powers_.emplace_back(nu * lp, 1.0 / nu);
  }
}

GapValue GapEvaluator::operator()(Complex s) const {
  Require(s.real() >= 0.75 - 1e-12, ErrorCode::kDomain, "log zeta gap needs Re s >= 3/4");
  std::vector<Complex> terms;
  terms.reserve(prime_logs_.size());
  for (double lp : prime_logs_) terms.push_back(std::exp(-s * lp));
  const Complex prime_sum = PairwiseSum(terms);
  terms.clear();
  for (const auto& [lpn, wt] : powers_) terms.push_back(wt * std::exp(-s * lpn));
  const Complex power_sum = PairwiseSum(terms);

  const double W = std::log(crossover_);
  const auto breaks = quad::Breakpoints(0.0, W, DensityKnots(0.0, W, spec_));
  const Complex c = 1.0 - s;
  const auto integral = quad::IntegratePanels<Complex>(
      [&](double w) { return DensityLog(w, spec_) * std::exp(c * w); }, breaks,
      OscillationPanelWidth(W, spec_, s.imag()));
  const double scale = std::max(1.0, std::abs(integral.value));
  Require(integral.error <= 1e-8 * scale, ErrorCode::kTolerance,
          "gap quadrature error above tolerance");
  GapValue out;
  out.primes = prime_sum - integral.value;
  out.powers = power_sum;
  out.gap = out.primes + out.powers;
  out.crossover = crossover_;
  out.truncated = truncated_;
  return out;
}

GapValue LogZetaGap(const PrimeSequence& P, const DensitySpec& spec, int K, Complex s) {
  return GapEvaluator(P, spec, K)(s);
}

GapSurvey SurveyGap(const GapEvaluator& gap, std::span<const double> sigmas,
                    std::span<const double> ts, int threads) {
  GapSurvey out;
  out.samples.resize(sigmas.size() * ts.size());
  ParallelFor(out.samples.size(), threads, [&](std::size_t i) {
    const double sigma = sigmas[i / ts.size()];
    const double t = ts[i % ts.size()];
    out.samples[i] = {sigma, t, std::abs(gap({sigma, t}).gap)};
  });
  for (const auto& smp : out.samples)
    if (std::abs(smp.t) <= 2.0) out.A_hat = std::max(out.A_hat, smp.abs_gap);
  for (const auto& smp : out.samples) {
    const double at = std::abs(smp.t);
    if (at < 2.0) continue;
    out.B_hat = std::max(out.B_hat, (smp.abs_gap - out.A_hat) / std::sqrt(std::log(at)));
  }
  return out;
}

double Sigma1(double beta, double log_x) {
  return 1.0 - 0.5 * std::pow(log_x, beta - 1.0);
}

double SigmaOfT(double t, double log_x) {
  return 1.0 - 0.25 * std::log(std::abs(t)) / log_x;
}

ZetaBoundCategory ClassifyBound(const SystemParams& params, int K, double sigma,
                                double t, double B) {
  const double at = std::abs(t);
  if (at >= 2.0 * params.Gamma(K))
    return {"high", std::exp(B * std::sqrt(std::log(at)))};
  if (at <= 2.0) return {"1", 1.0 / std::abs(sigma - 1.0)};
  const double base = std::exp(B * std::sqrt(std::log(at)));
  for (int k = params.k_beta; k <= K; ++k) {
    const double gk = params.Gamma(k);
    if (std::abs(at - gk) >= 0.5 * gk) continue;
    const double d = SystemParams::L(k) * std::abs(Complex(sigma, at) - params.Rho(k));
    if (d >= 1.0) return {"3a", base * (1.0 + at / d)};
    return {"3b", base};
  }
  return {"2", base};
}

ZetaBoundReport BoundSurvey(const PrimeSequence& P, const DensitySpec& spec, int K,
                            double x_anchor, int samples_per_curve, int threads) {
  const double log_x = std::log(x_anchor);
  Require(log_x >= SystemParams::L(K) && log_x < SystemParams::L(K + 1),
          ErrorCode::kInvalidArgument, "anchor must satisfy e^{4^K} <= x < e^{4^{K+1}}");
  Require(samples_per_curve >= 2, ErrorCode::kInvalidArgument, "need >= 2 samples per curve");
  const SystemParams& params = spec.params;
  const GapEvaluator gap(P, spec, K);

  ZetaBoundReport rep;
  rep.sigma1 = Sigma1(params.beta, log_x);
  rep.log_x_anchor = log_x;
  rep.k_beta = params.k_beta;

  const double sig[] = {0.75, 1.0, 1.5, 2.0};
  std::vector<double> ts = {0.0, 0.5, 1.0, 2.0};
  for (int i = 1; i <= 24; ++i) ts.push_back(2.0 * std::pow(5e3, i / 24.0));
  const GapSurvey gs = SurveyGap(gap, sig, ts, threads);
  rep.A_hat = gs.A_hat;
  rep.B_hat = gs.B_hat;

  const double gK = params.Gamma(K);
  struct Point { double sigma, t; const char* curve; };
  std::vector<Point> pts;
  for (int i = 0; i < samples_per_curve; ++i) {
    const double t = 0.1 * std::pow(2.0 * gK / 0.1, i / (samples_per_curve - 1.0)) *
                     (i + 1 == samples_per_curve ? 0.999 : 1.0);
    pts.push_back({rep.sigma1, t, "sigma1"});
  }
  for (int k = params.k_beta; k <= K; ++k) pts.push_back({rep.sigma1, params.Gamma(k), "sigma1"});
  for (int i = 0; i < samples_per_curve; ++i) {
    const double t = 2.0 * gK * std::pow(4.0, i / (samples_per_curve - 1.0));
    pts.push_back({std::max(0.75, SigmaOfT(t, log_x)), t, "sigma_t"});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.t < b.t; });

  rep.samples.resize(pts.size());
  ParallelFor(pts.size(), threads, [&](std::size_t i) {
    const Complex s{pts[i].sigma, pts[i].t};
    const Complex z = ZetaCK(params, K, s) * std::exp(gap(s).gap);
    const auto cat = ClassifyBound(params, K, s.real(), s.imag(), rep.B_hat);
    ZetaBoundSample& out = rep.samples[i];
    out.sigma = s.real();
    out.t = s.imag();
    out.abs_zeta = std::abs(z);
    out.category = cat.name;
    out.ratio = out.abs_zeta / cat.shape;
    out.curve = pts[i].curve;
  });
  const std::size_t cut = 2 * rep.samples.size() / 3;
  double early = 0.0, late = 0.0;
  for (std::size_t i = 0; i < rep.samples.size(); ++i) {
    const double r = rep.samples[i].ratio;
    rep.max_ratio = std::max(rep.max_ratio, r);
    (i < cut ? early : late) = std::max(i < cut ? early : late, r);
  }
  rep.growth_flag = late > 2.0 * early;
  return rep;
}

}  // namespace beurling

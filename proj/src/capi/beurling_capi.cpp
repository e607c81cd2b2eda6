#include "beurling/beurling.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "acceptance/acceptance.hpp"
#include "core/analysis.hpp"
#include "core/complex_g.hpp"
#include "core/counting.hpp"
#include "core/discretize.hpp"
#include "core/error.hpp"
#include "core/gdensity.hpp"
#include "core/zeta.hpp"
#include "harness/harness.hpp"

struct bl_params {
  beurling::SystemParams p;
};
struct bl_primes {
  beurling::PrimeSequence seq;
};
struct bl_config {
  beurling::harness::ExperimentConfig cfg;
};

namespace {

using beurling::Complex;
using beurling::ErrorCode;
using beurling::Require;

thread_local std::string g_last_error;

template <typename F>
bl_status Guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return BL_OK;
  } catch (const beurling::Error& e) {
    g_last_error = e.what();
    return static_cast<bl_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return BL_E_INTERNAL;
}

void NotNull(const void* p, const char* what) {
  Require(p != nullptr, ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

Complex In(bl_complex z) { return {z.re, z.im}; }
bl_complex Out(Complex z) { return {z.real(), z.imag()}; }

beurling::DensitySpec Spec(const bl_params* params, int truncated) {
  NotNull(params, "params");
  return {params->p, truncated ? beurling::DensityMode::kTruncated : beurling::DensityMode::kFull};
}

void CopyString(char* dst, std::size_t size, const std::string& src) {
  if (!dst || size == 0) return;
  const std::size_t n = std::min(size - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

void CopyGrid(const beurling::GridFunction& g, double* out, std::size_t capacity, std::size_t* written) {
  NotNull(written, "written");
  *written = g.values.size();
  if (out) {
    Require(capacity >= g.values.size(), ErrorCode::kRange, "output buffer too small");
    std::copy(g.values.begin(), g.values.end(), out);
  }
}

}  // namespace

extern "C" {

const char* bl_version(void) { return beurling::harness::kVersion; }

const char* bl_last_error(void) { return g_last_error.c_str(); }

const char* bl_status_name(bl_status status) {
  if (status == BL_OK) return "ok";
  return beurling::ErrorCodeName(static_cast<ErrorCode>(status));
}

bl_status bl_g_eval(bl_complex z, bl_complex* out) {
  return Guard([&] { NotNull(out, "out"); *out = Out(beurling::gfun::EvalG(In(z))); });
}

bl_status bl_g_derivative(bl_complex z, bl_complex* out) {
  return Guard([&] { NotNull(out, "out"); *out = Out(beurling::gfun::EvalGPrime(In(z))); });
}

bl_status bl_g_log(bl_complex z, bl_complex* out) {
  return Guard([&] { NotNull(out, "out"); *out = Out(beurling::gfun::LogG(In(z))); });
}

bl_status bl_g_zeros(int n_max, double b_cap, bl_gzero* out, size_t capacity) {
  return Guard([&] {
    NotNull(out, "out");
    Require(n_max >= 1, ErrorCode::kInvalidArgument, "n_max must be >= 1");
    Require(capacity >= static_cast<size_t>(n_max), ErrorCode::kRange, "output buffer too small");
    const auto zeros = beurling::gfun::FindZeros(n_max, b_cap);
    for (int n = 1; n <= n_max; ++n) {
      const auto& z = zeros[n];
      out[n - 1] = {z.index, Out(z.location), z.residual, z.rect_winding, z.strip_winding};
    }
  });
}

bl_status bl_gdensity(double u, double* out) {
  return Guard([&] { NotNull(out, "out"); *out = beurling::EvalGDensity(u); });
}

bl_status bl_mellin_log_g(bl_complex z, double tol, bl_complex* out, double* tail_bound) {
  return Guard([&] {
    NotNull(out, "out");
    const auto r = beurling::MellinLogG(In(z), tol);
    *out = Out(r.value);
    if (tail_bound) *tail_bound = r.tail_bound;
  });
}

bl_status bl_decay_slope(double w_lo, double w_hi, double* slope) {
  return Guard([&] { NotNull(slope, "slope"); *slope = beurling::SurveyDecay(w_lo, w_hi).slope; });
}

bl_status bl_params_create(double beta, int K, bl_params** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = nullptr;
    *out = new bl_params{beurling::MakeParams(beta, K)};
  });
}

void bl_params_destroy(bl_params* params) { delete params; }

bl_status bl_params_gamma(const bl_params* params, int k, double* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    Require(k >= 1, ErrorCode::kInvalidArgument, "k must be >= 1");
    *out = params->p.Gamma(k);
  });
}

bl_status bl_params_k_beta(const bl_params* params, int* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    *out = params->p.k_beta;
  });
}

bl_status bl_density(const bl_params* params, int truncated, double v, double* out) {
  return Guard([&] { NotNull(out, "out"); *out = beurling::Density(v, Spec(params, truncated)); });
}

bl_status bl_pi_c(const bl_params* params, int truncated, double x, double* out) {
  return Guard([&] { NotNull(out, "out"); *out = beurling::PiC(x, Spec(params, truncated)).value; });
}

bl_status bl_li(double x, double* out) {
  return Guard([&] { NotNull(out, "out"); *out = beurling::Li(x); });
}

bl_status bl_chebyshev_delta(const bl_params* params, int truncated, double w_lo, double w_hi,
                             int n, double* delta, double* min_density) {
  return Guard([&] {
    NotNull(delta, "delta");
    Require(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
    const auto grid = beurling::LogSpacedGrid(w_lo, w_hi, n);
    const auto r = beurling::ChebyshevDelta(Spec(params, truncated), grid);
    *delta = r.delta;
    if (min_density) *min_density = r.min_density;
  });
}

bl_status bl_primes_generate(const bl_params* params, int truncated, double x_max,
                             const char* scheme, uint64_t seed, int threads, bl_primes** out) {
  return Guard([&] {
    NotNull(out, "out");
    NotNull(scheme, "scheme");
    *out = nullptr;
    auto seq = beurling::Generate(Spec(params, truncated), x_max, beurling::ParseScheme(scheme),
                                  seed, threads);
    *out = new bl_primes{std::move(seq)};
  });
}

bl_status bl_primes_from_array(const double* primes, size_t n, double x_max, bl_primes** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = nullptr;
    Require(n == 0 || primes != nullptr, ErrorCode::kInvalidArgument, "primes is NULL");
    beurling::PrimeSequence seq;
    seq.primes.assign(primes, primes + n);
    for (std::size_t i = 0; i < n; ++i) {
      Require(seq.primes[i] > 1.0, ErrorCode::kDomain, "primes must exceed 1");
      Require(i == 0 || seq.primes[i] >= seq.primes[i - 1], ErrorCode::kInvalidArgument,
              "primes must be nondecreasing");
    }
    Require(n == 0 || x_max >= seq.primes.back(), ErrorCode::kInvalidArgument,
            "x_max below the largest prime");
    seq.x_max = x_max;
    *out = new bl_primes{std::move(seq)};
  });
}

bl_status bl_primes_save(const bl_primes* primes, const char* stem) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(stem, "stem");
    beurling::SavePrimes(primes->seq, stem);
  });
}

bl_status bl_primes_load(const char* stem, bl_primes** out) {
  return Guard([&] {
    NotNull(out, "out");
    NotNull(stem, "stem");
    *out = nullptr;
    *out = new bl_primes{beurling::LoadPrimes(stem)};
  });
}

void bl_primes_destroy(bl_primes* primes) { delete primes; }

size_t bl_primes_count(const bl_primes* primes) { return primes ? primes->seq.primes.size() : 0; }

const double* bl_primes_data(const bl_primes* primes) {
  return primes ? primes->seq.primes.data() : nullptr;
}

bl_status bl_pi_count(const bl_primes* primes, double x, size_t* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = beurling::PiCount(primes->seq, x);
  });
}

bl_status bl_discrepancy(const bl_primes* primes, const bl_params* params, int truncated, double x,
                         double t, double* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = beurling::ExpSumDiscrepancy(primes->seq, Spec(params, truncated), x, t);
  });
}

bl_status bl_count_n(const bl_primes* primes, double x, int threads, uint64_t* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = beurling::CountN(primes->seq, x, beurling::kDefaultEnumerationHorizon, threads);
  });
}

bl_status bl_psi(const bl_primes* primes, double x, double* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = beurling::Psi(primes->seq, x);
  });
}

bl_status bl_pi_riemann(const bl_primes* primes, double x, double* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = beurling::PiRiemann(primes->seq, x);
  });
}

bl_status bl_pi_from_psi(const bl_primes* primes, double x, double* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = beurling::PiFromPsi(primes->seq, x);
  });
}

bl_status bl_exp_star_primes(const bl_primes* primes, double W, double h, double* out,
                             size_t capacity, size_t* written) {
  return Guard([&] {
    NotNull(primes, "primes");
    Require(h > 0.0 && W > 0.0, ErrorCode::kInvalidArgument, "grid needs h > 0, W > 0");
    const auto m = beurling::PrimePowerMeasure(primes->seq.primes, std::exp(W + h));
    CopyGrid(beurling::ExpStar(m, W, h), out, capacity, written);
  });
}

bl_status bl_exp_star_continuous(const bl_params* params, double W, double h, double* out,
                                 size_t capacity, size_t* written) {
  return Guard([&] {
    const auto m = beurling::ContinuousMeasure(Spec(params, 1), h, W);
    CopyGrid(beurling::ExpStar(m, W, h), out, capacity, written);
  });
}

bl_status bl_zeta_c_product(const bl_params* params, bl_complex s, double tol, bl_complex* out,
                            int* terms) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    const auto r = beurling::ZetaCProduct(params->p, In(s), tol);
    *out = Out(r.value);
    if (terms) *terms = r.terms;
  });
}

bl_status bl_zeta_ck(const bl_params* params, int K, bl_complex s, bl_complex* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    *out = Out(beurling::ZetaCK(params->p, K, In(s)));
  });
}

bl_status bl_zeta_continuous_measure(const bl_params* params, int truncated, double h, double W,
                                     bl_complex s, bl_complex* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto m = beurling::ContinuousMeasure(Spec(params, truncated), h, W);
    *out = Out(beurling::ZetaFromMeasure(m, In(s)).value);
  });
}

bl_status bl_residue_ak(const bl_params* params, int K, double* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    *out = beurling::ResidueAK(params->p, K);
  });
}

bl_status bl_density_a_continuous(const bl_params* params, int K, double* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    *out = beurling::DensityAContinuous(params->p, K).value;
  });
}

bl_status bl_density_a(const bl_primes* primes, const bl_params* params, int truncated, double H,
                       double* out, double* error) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    const auto r = beurling::DensityA(primes->seq, Spec(params, truncated), H);
    *out = r.value;
    if (error) *error = r.error;
  });
}

bl_status bl_log_zeta_gap(const bl_primes* primes, const bl_params* params, int K, bl_complex s,
                          bl_complex* out) {
  return Guard([&] {
    NotNull(primes, "primes");
    NotNull(out, "out");
    *out = Out(beurling::LogZetaGap(primes->seq, Spec(params, 0), K, In(s)).gap);
  });
}

bl_status bl_ik(const bl_params* params, int k, double log_x, int asymptotic, double* value,
                double* uncertainty) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(value, "value");
    const auto r = beurling::Ik(params->p, k, log_x,
                                asymptotic ? beurling::IkMethod::kAsymptotic
                                           : beurling::IkMethod::kQuadrature);
    *value = r.value;
    if (uncertainty) *uncertainty = r.uncertainty;
  });
}

bl_status bl_psi_c(const bl_params* params, double log_x, int asymptotic, double* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    *out = beurling::PsiC(params->p, log_x,
                          asymptotic ? beurling::IkMethod::kAsymptotic
                                     : beurling::IkMethod::kQuadrature)
               .psiC;
  });
}

bl_status bl_envelope(double beta, double log_x, double* lambda_max, double* mu, int* k0,
                      double* log_E) {
  return Guard([&] {
    const auto e = beurling::EnvelopeAt(beta, log_x);
    if (lambda_max) *lambda_max = e.lambda_max;
    if (mu) *mu = e.mu;
    if (k0) *k0 = e.k0;
    if (log_E) *log_E = e.log_E;
  });
}

bl_status bl_oscillation_search(const bl_params* params, double log_x_center, double half_width,
                                int target_sign, int threads, bl_oscillation_record* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    const auto r =
        beurling::OscillationSearch(params->p, log_x_center, half_width, target_sign, threads);
    *out = {r.log_x, r.psiC, r.E, r.ratio, r.k0, r.mu_frac};
  });
}

bl_status bl_perron_check(const bl_params* params, int K, double x, double kappa, double T,
                          double* lhs, double* rhs, double* tail) {
  return Guard([&] {
    NotNull(params, "params");
    const auto r = beurling::PerronCheck(params->p, K, x, kappa, T);
    if (lhs) *lhs = r.lhs;
    if (rhs) *rhs = r.rhs;
    if (tail) *tail = r.tail;
  });
}

bl_status bl_config_create(bl_config** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new bl_config{};
  });
}

void bl_config_destroy(bl_config* config) { delete config; }

bl_status bl_config_load(bl_config* config, const char* path) {
  return Guard([&] {
    NotNull(config, "config");
    NotNull(path, "path");
    config->cfg = beurling::harness::LoadConfigFile(path, config->cfg);
  });
}

bl_status bl_config_set(bl_config* config, const char* key, const char* value) {
  return Guard([&] {
    NotNull(config, "config");
    NotNull(key, "key");
    NotNull(value, "value");
    beurling::harness::SetOption(config->cfg, key, value);
  });
}

int bl_run(const char* subcommand, const bl_config* config, char* report, size_t report_size) {
  if (!subcommand || !config) {
    g_last_error = "subcommand or config is NULL";
    CopyString(report, report_size, g_last_error);
    return 2;
  }
  beurling::harness::RunOutcome r;
  try {
    r = beurling::harness::Run(subcommand, config->cfg);
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.report = e.what();
  }
  g_last_error = r.exit_code == 0 ? "" : r.report;
  CopyString(report, report_size, r.report);
  return r.exit_code;
}

int bl_acceptance_count(void) { return beurling::acceptance::CriterionCount(); }

bl_status bl_acceptance_run(int id, int threads, bl_criterion* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto r = beurling::acceptance::RunCriterion(id, {threads});
    out->id = r.id;
    out->passed = r.passed ? 1 : 0;
    out->measured = r.measured;
    out->seconds = r.seconds;
    CopyString(out->name, sizeof out->name, r.name);
    CopyString(out->detail, sizeof out->detail, r.detail);
  });
}

}  // extern "C"

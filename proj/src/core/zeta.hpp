#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "core/counting.hpp"
#include "core/discretize.hpp"
#include "core/system.hpp"

namespace beurling {

struct ZetaValue {
  Complex value;
  Complex log_value;    // branch assembled from per-factor logs
  double error = 0.0;   // bound on |log error|
  int terms = 0;        // factors used (product routes)
};

// exp(sum of atoms w * loc^{-s} + int density u^{-s} du). A non-empty density
// is continued past its grid by the bound |f| <= 2/w, which needs Re s > 1.
ZetaValue ZetaFromMeasure(const MixedMeasure& m, Complex s);

// s/(s-1) prod_k G(l_k (s - rho_k)) G(l_k (s - conj rho_k)), factors added
// until the remaining tail is certified below tol. kDomain unless Re s >= 1,
// s != 1; kTolerance when gamma_k overflows first.
ZetaValue ZetaCProduct(const SystemParams& params, Complex s, double tol = 1e-14);

// Finite product over k <= K; defined for every s != 1.
Complex ZetaCK(const SystemParams& params, int K, Complex s);

// prod_{k <= K} |G(1 - i l_k gamma_k)|^2; 1 for K = 0.
double ResidueAK(const SystemParams& params, int K);

// Same residue through exp(int_1^inf (1/u)(f_{C,K}(u) - (1 - 1/u)/log u) du):
// each oscillating term becomes -2 Re int_0^inf g(e^s) e^{-(1 + i l_k gamma_k)s} ds,
// integrated exactly piece by piece on the g table.
quad::Result<double> DensityAContinuous(const SystemParams& params, int K);

// a = exp(int_1^inf (1/u)(dPi - dLi)) from the primes up to H:
// sum_{p <= H} -log(1 - 1/p) - int_1^H f(u)/u du + log a_C, where a_C is the
// residue of the continuous system the primes came from. Error is O(1/H).
quad::Result<double> DensityA(const PrimeSequence& P, const DensitySpec& spec, double H);

struct GapValue {
  Complex gap;          // log zeta_K - log zeta_{C,K}
  Complex powers;       // sum_{nu >= 2} part (Pi - pi)
  Complex primes;       // pi - f_C part
  double crossover = 0.0;
  bool truncated = false;  // primes stop before e^{4^{K+1}}
};

// int_1^{e^{4^{K+1}}} u^{-s} (dPi_K - f_{C,K} du). Needs Re s >= 3/4.
GapValue LogZetaGap(const PrimeSequence& P, const DensitySpec& spec, int K, Complex s);

// Pre-tabulated prime powers so repeated gap evaluations share the atoms.
class GapEvaluator {
 public:
  GapEvaluator(const PrimeSequence& P, const DensitySpec& spec, int K);
  GapValue operator()(Complex s) const;
  double crossover() const { return crossover_; }

 private:
  DensitySpec spec_;
  int K_;
  double crossover_;
  bool truncated_;
  std::vector<double> prime_logs_;
  std::vector<std::pair<double, double>> powers_;  // (log p^nu, 1/nu), nu >= 2
};

struct GapSample {
  double sigma = 0.0, t = 0.0, abs_gap = 0.0;
};
struct GapSurvey {
  std::vector<GapSample> samples;
  double A_hat = 0.0;  // max |gap| over |t| <= 2
  double B_hat = 0.0;  // max (|gap| - A_hat)/sqrt(log|t|) over |t| >= 2
};
GapSurvey SurveyGap(const GapEvaluator& gap, std::span<const double> sigmas,
                    std::span<const double> ts, int threads = 1);

struct ZetaBoundSample {
  double sigma = 0.0, t = 0.0;
  double abs_zeta = 0.0;
  std::string category;  // "1", "2", "3a", "3b", "high"
  double ratio = 0.0;    // |zeta_K| / category shape (unit constants, B = B_hat)
  std::string curve;     // "sigma1" | "sigma_t"
};

struct ZetaBoundReport {
  double sigma1 = 0.0;
  double log_x_anchor = 0.0;
  double A_hat = 0.0, B_hat = 0.0;
  int k_beta = 1;
  std::vector<ZetaBoundSample> samples;
  double max_ratio = 0.0;
  bool growth_flag = false;  // ratios over the last third exceed twice the first two thirds
};

struct ZetaBoundCategory {
  std::string name;
  double shape = 1.0;
};
// Region of s for the zeta_K bound and the bound's shape there.
ZetaBoundCategory ClassifyBound(const SystemParams& params, int K, double sigma,
                                double t, double B);

// sigma_1 = 1 - (1/2)(log x)^{beta-1}; sigma(t) = 1 - (1/4) log|t| / log x.
double Sigma1(double beta, double log_x);
double SigmaOfT(double t, double log_x);

// zeta_K = zeta_{C,K} exp(gap) sampled on sigma_1 (t up to 2 gamma_K, with
// every window centre gamma_k) and on sigma(t) beyond 2 gamma_K.
ZetaBoundReport BoundSurvey(const PrimeSequence& P, const DensitySpec& spec, int K,
                            double x_anchor, int samples_per_curve = 96,
                            int threads = 1);

}  // namespace beurling

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/counting.hpp"
#include "core/discretize.hpp"
#include "core/system.hpp"

namespace beurling {

enum class IkMethod { kQuadrature, kAsymptotic };
const char* IkMethodName(IkMethod m);

struct IkValue {
  int k = 0;
  double value = 0.0;
  double uncertainty = 0.0;  // quadrature error, or the unit-constant envelope
  IkMethod method = IkMethod::kQuadrature;
};

// K with e^{4^K} <= x < e^{4^{K+1}} (0 below e^4).
int LevelOf(double log_x);

// I_k(x) = int_{l_k}^{log x} (w/l_k) g(e^{w/l_k}) e^{w(1 - 1/l_k)} cos(gamma_k w) dw.
// The asymptotic form is x^{1-1/l_k}/gamma_k sin(gamma_k log x). With strict,
// it is refused (kDomain) for k > LevelOf(x) - 2.
IkValue Ik(const SystemParams& params, int k, double log_x, IkMethod method,
           bool strict = false);

struct PsiCValue {
  double log_x = 0.0;
  double psiC = 0.0;
  double F = 0.0;
  std::vector<IkValue> terms;
  double uncertainty = 0.0;
};

// psi_C(x) = x - 1 - log x - 2 sum_k I_k(x). Asymptotic: closed form for
// k <= LevelOf(x) - 2, quadrature for the top two levels.
PsiCValue PsiC(const SystemParams& params, double log_x, IkMethod method);

struct Envelope {
  double lambda_max = 0.0;
  double mu = 0.0;
  int k0 = 0;
  double log_E = 0.0;  // log E(x)
  double E = 0.0;
};
Envelope EnvelopeAt(double beta, double log_x);

enum class Dominance { kLower, kNeither, kUpper };
struct DominantTerms {
  Envelope env;
  double mu_frac = 0.0;
  Dominance dominant = Dominance::kLower;  // I_{k0}, neither, I_{k0+1}
  double predicted_lower = 0.0;  // |I_{k0}| / E from the asymptotic amplitude
  double predicted_upper = 0.0;  // |I_{k0+1}| / E
  bool precondition_met = false; // lambda_max < 4^{K-2}
};
// With strict, kDomain when lambda_max >= 4^{K-2}.
DominantTerms ClassifyDominantTerms(const SystemParams& params, double log_x,
                                    bool strict = false);

struct OscillationRecord {
  double log_x = 0.0;
  double psiC = 0.0;
  std::vector<IkValue> F_terms;
  double E = 0.0;
  double ratio = 0.0;  // (x - psi_C(x)) / E(x)
  int k0 = 0;
  double mu_frac = 0.0;
};

struct OscillationScan {
  std::vector<OscillationRecord> records;
  std::size_t argmax = 0;
  std::size_t argmin = 0;
  double step = 0.0;
};

// Scans log x over [centre - half_width, centre + half_width] with at least
// 64 points per period of sin(gamma_{k0} log x).
OscillationScan ScanOscillation(const SystemParams& params, double log_x_center,
                                double half_width, int threads = 1);
// Record maximizing target_sign * ratio.
OscillationRecord OscillationSearch(const SystemParams& params, double log_x_center,
                                    double half_width, int target_sign,
                                    int threads = 1);

struct PsiBridgeRow {
  double x = 0.0, psi = 0.0, psiC = 0.0, normalized = 0.0;  // |psi - psiC| / (sqrt x log x)
};
std::vector<PsiBridgeRow> PsiBridge(const PrimeSequence& P, const SystemParams& params,
                                    std::span<const double> xs, int threads = 1);

struct NErrorRow {
  double x = 0.0;
  double N = 0.0;
  double rel_error = 0.0;  // (N - a x) / x
};
struct NErrorProfile {
  std::vector<NErrorRow> rows;
  std::vector<double> decade_lo;       // window [10^d, 10^{d+1}], both ends included
  std::vector<double> decade_median;   // median |rel_error| per window
  bool medians_decreasing = false;
  double c_hat = 0.0;      // -slope of log|rel_error| against (log x)^beta
  double intercept = 0.0;
};
NErrorProfile NErrorProfileRun(const PrimeSequence& P, double a_hat, double beta,
                               std::span<const double> xs,
                               double horizon = kDefaultEnumerationHorizon,
                               int threads = 1);

struct PerronResult {
  double lhs = 0.0;    // int_1^x N(u) du
  double rhs = 0.0;    // truncated line integral
  double gap = 0.0;    // |lhs - rhs|
  double tail = 0.0;   // zeta(kappa) x^{kappa+1} / (pi T)
  double relative = 0.0;  // (gap + tail) / lhs
  double step = 0.0;
};

using ZetaFunction = std::function<Complex(Complex)>;

// int_1^x N = (1/pi) int_0^inf Re[zeta(kappa+it) x^{kappa+1+it} / ((kappa+it)(kappa+1+it))] dt.
// N is the cell-wise constant grid function from exp*.
PerronResult PerronCheck(const ZetaFunction& zeta, const GridFunction& N, double x,
                         double kappa, double T, double dt = 0.01);
// Continuous system truncated at K: N from exp* of f_{C,K}, zeta = zeta_{C,K}.
PerronResult PerronCheck(const SystemParams& params, int K, double x, double kappa,
                         double T, double h = 1.0 / 1024.0, double dt = 0.01);

}  // namespace beurling

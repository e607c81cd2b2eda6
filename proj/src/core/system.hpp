#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/quadrature.hpp"

namespace beurling {

using Complex = std::complex<double>;

// l_k = 4^k, gamma_k = exp(4^{beta k}), rho_k = 1 - 1/l_k + i gamma_k.
struct SystemParams {
  double beta = 0.5;
  int K = 1;
  std::vector<double> l;        // index k-1
  std::vector<double> gamma;
  std::vector<Complex> rho;
  int k_beta = 1;               // 3 gamma_k < gamma_{k+1} for all k >= k_beta

  static double L(int k);
  // Valid for any k >= 1 (not only k <= K); kRange once gamma_k overflows.
  double Gamma(int k) const;
  Complex Rho(int k) const;
  // Largest k with gamma_k representable.
  int MaxRepresentableK() const;
};

// kInvalidArgument for beta outside (0,1) or K < 1 or gamma_K overflow.
SystemParams MakeParams(double beta, int K);

enum class DensityMode { kFull, kTruncated };

struct DensitySpec {
  SystemParams params;
  DensityMode mode = DensityMode::kFull;
};

// Li(x) = int_1^x (1 - 1/u) / log u du (adaptive quadrature).
double Li(double x);

// Largest k whose term is active at w (4^k <= w), capped at K when truncated.
int ActiveTermCount(double w, const DensitySpec& spec);

// f_C(e^w) (or f_{C,K}); f(1) = 1 by continuity.
double DensityLog(double w, const DensitySpec& spec);
// Average of the one-sided limits; equals DensityLog away from g-knots.
double DensityLogMidpoint(double w, const DensitySpec& spec);
double Density(double v, const DensitySpec& spec);

// Breakpoints of the density in (w_lo, w_hi): w = m * l_k for active k.
std::vector<double> DensityKnots(double w_lo, double w_hi, const DensitySpec& spec);
// Panel cap pi / (4 * (gamma_max + extra_frequency)) for terms active below w_hi.
double OscillationPanelWidth(double w_hi, const DensitySpec& spec,
                             double extra_frequency = 0.0);

// Pi_C(x) = int_1^x f(v) dv with oscillation- and knot-aware GL16 panels.
quad::Result<double> PiC(double x, const DensitySpec& spec);

struct DeltaReport {
  double delta = 0.0;      // max |f(v) log v / (1 - 1/v) - 1|
  double argmax_v = 0.0;
  double min_density = 0.0;
};
// kTolerance when delta >= 1 (failed construction); kDomain for grid below e^4.
DeltaReport ChebyshevDelta(const DensitySpec& spec, std::span<const double> v_grid);

// n points log-spaced (uniform in w) over [e^{w_lo}, e^{w_hi}].
std::vector<double> LogSpacedGrid(double w_lo, double w_hi, int n);

}  // namespace beurling

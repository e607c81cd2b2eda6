#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/discretize.hpp"

namespace beurling {

struct Atom {
  double location = 1.0;  // >= 1
  double weight = 0.0;    // > 0
};

// Measure on [1, inf): atoms below `crossover`, plus a density with respect to
// du sampled at w = w_start + i*h (w = log u) from the crossover up.
struct MixedMeasure {
  std::vector<Atom> atoms;       // sorted by location
  double h = 0.0;
  double w_start = 0.0;
  std::vector<double> density;   // f(e^w) at grid nodes
  double crossover = 1.0;
  bool truncated = false;        // atoms stop at the generation horizon

  double w_end() const {
    return density.empty() ? w_start : w_start + h * static_cast<double>(density.size() - 1);
  }
};

// Closed counting (items <= threshold), right-continuous.
struct CountingTable {
  std::vector<double> thresholds;
  std::vector<double> values;
};

// Cumulative N(e^{jh}), j = 0..J, from a grid exp*.
struct GridFunction {
  double h = 0.0;
  std::vector<double> values;
  double At(double x) const;  // value of the cell containing log x
  double w_end() const { return h * static_cast<double>(values.size() - 1); }
};

inline constexpr double kDefaultEnumerationHorizon = 1e7;

// Number of multisets of primes (with the empty product) whose product is
// <= x; depth-first over nondecreasing prime index, pruned at p_j > x/product.
std::uint64_t CountN(std::span<const double> primes, double x,
                     double horizon = kDefaultEnumerationHorizon, int threads = 1);
std::uint64_t CountN(const PrimeSequence& P, double x,
                     double horizon = kDefaultEnumerationHorizon, int threads = 1);

// psi(x) = sum over prime powers p^nu <= x of log p.
double Psi(std::span<const double> primes, double x);
// Pi(x) = sum_nu pi(x^{1/nu}) / nu.
double PiRiemann(std::span<const double> primes, double x);
// Stieltjes sum int_1^x dpsi(u)/log u = sum_{p^nu <= x} log p / log p^nu.
double PiFromPsi(std::span<const double> primes, double x);

double Psi(const PrimeSequence& P, double x);
double PiRiemann(const PrimeSequence& P, double x);
double PiFromPsi(const PrimeSequence& P, double x);

// Atoms (p^nu, 1/nu) for every prime power < limit.
MixedMeasure PrimePowerMeasure(std::span<const double> primes, double limit);

// Density-only measure of f on [0, W] in w with step h. Nodes sitting on a
// g-knot take the mean of the one-sided limits.
MixedMeasure ContinuousMeasure(const DensitySpec& spec, double h, double W);

// dPi_K = 1_{[1, X)} dPi + 1_{[X, inf)} f_{C,K}(v) dv with X = e^{4^{K+1}}.
// When P stops short of X, allow_truncation yields the atoms-only variant
// (flagged); otherwise kRange.
MixedMeasure BuildPiK(const PrimeSequence& P, const SystemParams& params, int K,
                      double h, double W, bool allow_truncation);

// dN = exp*(dPi) on [0, W] in w through w dN = (w dPi) * dN. Atoms land in
// the cell floor(log p / h); strict rejects two atoms in one cell.
GridFunction ExpStar(const MixedMeasure& m, double W, double h, bool strict = false);

}  // namespace beurling

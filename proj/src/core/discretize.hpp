#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/system.hpp"

namespace beurling {

enum class Scheme { kMedian, kRandom };

const char* SchemeName(Scheme s);
Scheme ParseScheme(const std::string& name);  // "median" | "random"

// Generalized primes 1 < p_1 <= p_2 <= ... <= x_max with provenance.
struct PrimeSequence {
  std::vector<double> primes;
  Scheme scheme = Scheme::kMedian;
  std::uint64_t seed = 0;
  double x_max = 0.0;
  double beta = 0.5;
  int K = 1;
  DensityMode mode = DensityMode::kFull;
  double mass = 0.0;  // int_1^{x_max} f
};

// Cuts [1, x_max] into consecutive blocks of f-mass exactly 1 (the trailing
// partial block is dropped) and places one prime per block: at the block's
// f-median, or drawn from f restricted to the block (inverse CDF through a
// monotone cubic fit of the block's cumulative table, RNG stream keyed by
// (seed, block index)).
PrimeSequence Generate(const DensitySpec& spec, double x_max, Scheme scheme,
                       std::uint64_t seed, int threads = 1);

// Number of p_j <= x.
std::size_t PiCount(const PrimeSequence& P, double x);

// D(x, t) = |sum_{p_j <= x} p_j^{-it} - int_1^x u^{-it} f(u) du|.
double ExpSumDiscrepancy(const PrimeSequence& P, const DensitySpec& spec,
                         double x, double t);
// Same for every x of an increasing grid, in one sweep.
std::vector<double> ExpSumDiscrepancies(const PrimeSequence& P,
                                        const DensitySpec& spec,
                                        std::span<const double> xs, double t);

// Right-hand side shape sqrt(x) + sqrt(x log(|t|+1) / log(x+1)).
double DiscrepancyScale(double x, double t);

// <stem>.bin: uint64 count then doubles, little-endian.
// <stem>.meta: key=value lines (scheme, seed, beta, K, mode, x_max, mass, count).
void SavePrimes(const PrimeSequence& P, const std::string& stem);
PrimeSequence LoadPrimes(const std::string& stem);

}  // namespace beurling

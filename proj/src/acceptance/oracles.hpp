#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/system.hpp"

namespace beurling::oracle {

// Counts exponent vectors (e_1, ..., e_m) with prod p_i^{e_i} <= x by an
// odometer over all vectors with e_i <= log x / log p_i.
std::uint64_t BruteForceCount(std::span<const double> primes, double x);

// Pi_C at each point of an increasing sequence (cumulative segment sums).
std::vector<double> CumulativePiC(const DensitySpec& spec, std::span<const double> xs);

}  // namespace beurling::oracle

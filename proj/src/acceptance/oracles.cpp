#include "acceptance/oracles.hpp"

#include <cmath>

#include "core/error.hpp"

namespace beurling::oracle {

std::uint64_t BruteForceCount(std::span<const double> primes, double x) {
  if (x < 1.0) return 0;
  const std::size_t m = primes.size();
  std::vector<int> cap(m), e(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Require(primes[i] > 1.0, ErrorCode::kDomain, "primes must exceed 1");
    cap[i] = static_cast<int>(std::floor(std::log(x) / std::log(primes[i]))) + 1;
  }
  std::uint64_t count = 0;
  while (true) {
    long double prod = 1.0L;
    for (std::size_t i = 0; i < m; ++i) prod *= std::pow(static_cast<long double>(primes[i]), e[i]);
    if (prod <= static_cast<long double>(x)) ++count;
    std::size_t i = 0;
    while (i < m && ++e[i] > cap[i]) e[i++] = 0;
    if (i == m) break;
  }
  return count;
}

std::vector<double> CumulativePiC(const DensitySpec& spec, std::span<const double> xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  double total = 0.0, w_prev = 0.0;
  for (double x : xs) {
    const double w = std::log(x);
    Require(w >= w_prev, ErrorCode::kInvalidArgument, "points must increase from 1");
    if (w > w_prev) {
      const auto breaks = quad::Breakpoints(w_prev, w, DensityKnots(w_prev, w, spec));
      total += quad::IntegratePanels<double>(
                   [&](double s) { return DensityLog(s, spec) * std::exp(s); }, breaks,
                   OscillationPanelWidth(w, spec))
                   .value;
      w_prev = w;
    }
    out.push_back(total);
  }
  return out;
}

}  // namespace beurling::oracle

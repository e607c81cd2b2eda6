#include "core/counting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace beurling {
namespace {

std::uint64_t CountFrom(std::span<const double> p, std::size_t start,
                        double product, double x) {
  std::uint64_t count = 1;
  for (std::size_t j = start; j < p.size(); ++j) {
    const double q = product * p[j];
    if (q > x) break;
    count += CountFrom(p, j, q, x);
  }
  return count;
}

void CheckHorizon(const PrimeSequence& P, double x) {
  Require(x <= P.x_max * (1.0 + 1e-12), ErrorCode::kDomain,
          "x beyond the prime sequence horizon");
}

}  // namespace

double GridFunction::At(double x) const {
  Require(x >= 1.0, ErrorCode::kDomain, "grid function needs x >= 1");
  const auto j = static_cast<std::size_t>(std::floor(std::log(x) / h));
  Require(j < values.size(), ErrorCode::kRange, "x beyond the grid");
  return values[j];
}

std::uint64_t CountN(std::span<const double> primes, double x, double horizon,
                     int threads) {
  Require(x <= horizon * (1.0 + 1e-12), ErrorCode::kRange, "x beyond the enumeration horizon");
  if (x < 1.0) return 0;
  std::size_t top = 0;
  while (top < primes.size() && primes[top] <= x) ++top;
  std::vector<std::uint64_t> branch(top, 0);
  ParallelFor(top, threads, [&](std::size_t j) {
    branch[j] = CountFrom(primes, j, primes[j], x);
  });
  std::uint64_t total = 1;
  for (auto b : branch) total += b;
  return total;
}

std::uint64_t CountN(const PrimeSequence& P, double x, double horizon, int threads) {
  CheckHorizon(P, x);
  return CountN(P.primes, x, horizon, threads);
}

double Psi(std::span<const double> primes, double x) {
  double total = 0.0;
  for (double p : primes) {
    if (p > x) break;
    int nu = 0;
    for (double pw = p; pw <= x; pw *= p) ++nu;
    total += nu * std::log(p);
  }
  return total;
}

double PiRiemann(std::span<const double> primes, double x) {
  if (primes.empty() || x < primes.front()) return 0.0;
  // sum over nu of pi(x^{1/nu}) / nu, nu <= log x / log p_1.
  const int nu_max = static_cast<int>(std::floor(std::log(x) / std::log(primes.front()) + 1e-12));
  double total = 0.0;
  for (int nu = 1; nu <= nu_max; ++nu) {
    // pi(x^{1/nu}) counted exactly as #{p : p^nu <= x}.
    std::size_t count = 0;
    for (double p : primes) {
      double pw = 1.0;
      for (int i = 0; i < nu; ++i) pw *= p;
      if (pw > x) break;
      ++count;
    }
    total += static_cast<double>(count) / nu;
  }
  return total;
}

double PiFromPsi(std::span<const double> primes, double x) {
  double total = 0.0;
  for (double p : primes) {
    if (p > x) break;
    const double lp = std::log(p);
    int nu = 1;
    for (double pw = p; pw <= x; pw *= p, ++nu) total += lp / (nu * lp);
  }
  return total;
}

double Psi(const PrimeSequence& P, double x) {
  CheckHorizon(P, x);
  return Psi(P.primes, x);
}
double PiRiemann(const PrimeSequence& P, double x) {
  CheckHorizon(P, x);
  return PiRiemann(P.primes, x);
}
double PiFromPsi(const PrimeSequence& P, double x) {
  CheckHorizon(P, x);
  return PiFromPsi(P.primes, x);
}

MixedMeasure PrimePowerMeasure(std::span<const double> primes, double limit) {
  MixedMeasure m;
  for (double p : primes) {
    if (p >= limit) break;
    int nu = 1;
    for (double pw = p; pw < limit; pw *= p, ++nu) m.atoms.push_back({pw, 1.0 / nu});
  }
  std::sort(m.atoms.begin(), m.atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  m.crossover = limit;
  m.w_start = std::log(limit);
  return m;
}

MixedMeasure ContinuousMeasure(const DensitySpec& spec, double h, double W) {
  Require(h > 0.0 && W > 0.0, ErrorCode::kInvalidArgument, "grid needs h > 0, W > 0");
  MixedMeasure m;
  m.h = h;
  m.w_start = 0.0;
  m.crossover = 1.0;
  const auto n = static_cast<std::size_t>(std::floor(W / h + 1e-9)) + 1;
  m.density.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    m.density[i] = DensityLogMidpoint(h * static_cast<double>(i), spec);
  return m;
}

MixedMeasure BuildPiK(const PrimeSequence& P, const SystemParams& params, int K,
                      double h, double W, bool allow_truncation) {
  Require(K >= 1 && K <= params.K, ErrorCode::kInvalidArgument,
          "K must lie in 1..params.K");
  const double w_cross = SystemParams::L(K + 1);
  const bool short_horizon = std::log(P.x_max) < w_cross;
  Require(!short_horizon || allow_truncation, ErrorCode::kRange,
          "prime horizon below the Pi_K crossover e^{4^{K+1}}");
  const double limit = short_horizon ? P.x_max : std::exp(w_cross);
  MixedMeasure m = PrimePowerMeasure(P.primes, std::nextafter(limit, INFINITY));
  m.crossover = std::exp(w_cross);
  m.w_start = w_cross;
  m.h = h;
  m.truncated = short_horizon;
  if (!short_horizon && W > w_cross) {
    DensitySpec spec{params, DensityMode::kTruncated};
    spec.params.K = K;
    const auto n = static_cast<std::size_t>(std::floor((W - w_cross) / h + 1e-9)) + 1;
    m.density.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      m.density[i] = DensityLogMidpoint(w_cross + h * static_cast<double>(i), spec);
  }
  return m;
}

GridFunction ExpStar(const MixedMeasure& m, double W, double h, bool strict) {
  Require(h > 0.0 && W > 0.0, ErrorCode::kInvalidArgument, "grid needs h > 0, W > 0");
  const auto J = static_cast<std::size_t>(std::floor(W / h + 1e-9));
  std::vector<double> pi(J + 1, 0.0);
  std::vector<int> atoms_in_cell(J + 1, 0);
  for (const Atom& a : m.atoms) {
    const double w = std::log(a.location);
    const auto cell = static_cast<std::size_t>(std::floor(w / h));
    if (cell > J) continue;
    if (cell == 0) {
      std::ostringstream msg;
      msg << "atom at " << a.location << " falls in the first cell; refine h";
      Fail(ErrorCode::kRange, msg.str());
    }
    if (strict && ++atoms_in_cell[cell] > 1) {
      std::ostringstream msg;
      msg << "two atoms share cell " << cell << " (h = " << h << ")";
      Fail(ErrorCode::kRange, msg.str());
    }
    pi[cell] += a.weight;
  }
  if (!m.density.empty()) {
    const double ratio = m.h / h;
    Require(std::abs(ratio - std::round(ratio)) < 1e-9 && std::round(ratio) >= 1.0,
            ErrorCode::kInvalidArgument, "density step must be a multiple of h");
    for (std::size_t i = 0; i < m.density.size(); ++i) {
      const double w = m.w_start + m.h * static_cast<double>(i);
      const auto cell = static_cast<std::size_t>(std::llround(w / h));
      if (cell > J) break;
      const bool end = (i == 0 || i + 1 == m.density.size());
      pi[cell] += (end ? 0.5 : 1.0) * m.h * m.density[i] * std::exp(w);
    }
  }
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 1; i <= J; ++i)
    if (pi[i] != 0.0) nonzero.push_back(i);
  std::vector<double> n(J + 1, 0.0);
  n[0] = 1.0;
  for (std::size_t j = 1; j <= J; ++j) {
    double acc = 0.0;
    for (std::size_t i : nonzero) {
      if (i > j) break;
      acc += static_cast<double>(i) * pi[i] * n[j - i];
    }
    n[j] = acc / static_cast<double>(j);
  }
  GridFunction out;
  out.h = h;
  out.values.resize(J + 1);
  double cum = 0.0;
  for (std::size_t j = 0; j <= J; ++j) out.values[j] = (cum += n[j]);
  return out;
}

}  // namespace beurling

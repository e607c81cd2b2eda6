#include "core/discretize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

// Boost 1.74 pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace beurling {
namespace {

constexpr int kTableNodes = 64;

// GL16 mass of phi(w) = f(e^w) e^w over [a, b], honouring knots and the
// oscillation cap.
class MassIntegrator {
 public:
  explicit MassIntegrator(const DensitySpec& spec) : spec_(spec) {}

  double Phi(double w) const { return DensityLog(w, spec_) * std::exp(w); }

  double Mass(double a, double b) const {
    if (!(b > a)) return 0.0;
    const auto breaks = quad::Breakpoints(a, b, DensityKnots(a, b, spec_));
    const double width = OscillationPanelWidth(b, spec_);
    const auto& rule = quad::GaussLegendre16();
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
      const double lo = breaks[s], hi = breaks[s + 1];
      const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / width - 1e-12)));
      const double pw = (hi - lo) / panels;
      for (int p = 0; p < panels; ++p) {
        const double mid = lo + pw * (p + 0.5);
        double q = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
          q += rule.weights[i] * Phi(mid + 0.5 * pw * rule.nodes[i]);
        total += 0.5 * pw * q;
      }
    }
    return total;
  }

  // Smallest b > a with Mass(a, b) = target, by safeguarded Newton.
  double Solve(double a, double target, double w_stop) const {
    double lo = a, hi = std::numeric_limits<double>::infinity();
    double b = a + target / std::max(Phi(a), 1e-300);
    for (int it = 0; it < 200; ++it) {
      const double F = Mass(a, b) - target;
      if (std::abs(F) <= 1e-13 * target) return b;
      // Mass is increasing in b, so the root lies beyond the horizon.
      if (F < 0 && b >= w_stop) return std::numeric_limits<double>::infinity();
      if (F < 0) lo = b; else hi = b;
      double next = b - F / std::max(Phi(b), 1e-300);
      if (!(next > lo && next < hi)) next = std::isinf(hi) ? lo + 2.0 * (lo - a + 1e-3) : 0.5 * (lo + hi);
      if (std::abs(next - b) <= 4e-16 * std::abs(b)) return next;
      b = next;
    }
    Fail(ErrorCode::kConvergence, "block boundary solve did not converge");
  }

 private:
  const DensitySpec& spec_;
};

double RandomInBlock(const MassIntegrator& mi, const DensitySpec& spec, double a,
                     double b, std::uint64_t seed, std::uint64_t block) {
  std::vector<double> nodes;
  for (int i = 0; i < kTableNodes; ++i)
    nodes.push_back(a + (b - a) * i / (kTableNodes - 1));
  for (double k : DensityKnots(a, b, spec)) nodes.push_back(k);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const auto& rule = quad::GaussLegendre2();
  std::vector<double> cum{0.0};
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double lo = nodes[i], hi = nodes[i + 1];
    double q = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      q += rule.weights[j] * mi.Phi(0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[j]);
    cum.push_back(cum.back() + 0.5 * (hi - lo) * q);
  }
  const double total = cum.back();
  for (double& c : cum) c /= total;
  // Drop nodes whose cumulative did not advance (keeps pchip abscissas increasing).
  std::vector<double> xs{cum[0]}, ys{nodes[0]};
  for (std::size_t i = 1; i < cum.size(); ++i) {
    if (cum[i] > xs.back()) {
      xs.push_back(cum[i]);
      ys.push_back(nodes[i]);
    }
  }
  Rng rng(StreamSeed(seed, block));
  const double u = rng.Uniform();
  if (xs.size() < 4) return a + u * (b - a);
  boost::math::interpolators::pchip<std::vector<double>> inverse(std::move(xs), std::move(ys));
  return std::clamp(inverse(u), a, b);
}

void PutU64(std::ostream& os, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t GetU64(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  Require(static_cast<bool>(is), ErrorCode::kIo, "truncated prime file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

}  // namespace

const char* SchemeName(Scheme s) { return s == Scheme::kMedian ? "median" : "random"; }

Scheme ParseScheme(const std::string& name) {
  if (name == "median") return Scheme::kMedian;
  if (name == "random") return Scheme::kRandom;
  Fail(ErrorCode::kInvalidArgument, "unknown scheme '" + name + "'");
}

PrimeSequence Generate(const DensitySpec& spec, double x_max, Scheme scheme,
                       std::uint64_t seed, int threads) {
  Require(x_max > 1.0 && std::isfinite(x_max), ErrorCode::kInvalidArgument,
          "x_max must be finite and > 1");
  const double W = std::log(x_max);
  MassIntegrator mi(spec);
  PrimeSequence P;
  P.scheme = scheme;
  P.seed = seed;
  P.x_max = x_max;
  P.beta = spec.params.beta;
  P.K = spec.params.K;
  P.mode = spec.mode;

  // Boundaries are a prefix recurrence; placement below is per block.
  std::vector<double> bounds{0.0};
  while (true) {
    const double b = mi.Solve(bounds.back(), 1.0, W);
    if (!(b <= W)) break;
    bounds.push_back(b);
  }
  const std::size_t blocks = bounds.size() - 1;
  P.mass = static_cast<double>(blocks) + mi.Mass(bounds.back(), W);
  Require(blocks >= 1, ErrorCode::kInvalidArgument,
          "insufficient mass: int_1^{x_max} f < 1");

  std::vector<double> logs(blocks);
  ParallelFor(blocks, threads, [&](std::size_t j) {
    const double a = bounds[j], b = bounds[j + 1];
    double w;
    if (scheme == Scheme::kMedian) {
      w = std::min(mi.Solve(a, 0.5, b), b);
    } else {
      w = RandomInBlock(mi, spec, a, b, seed, j);
    }
    logs[j] = w;
  });
  P.primes.resize(blocks);
  for (std::size_t j = 0; j < blocks; ++j) P.primes[j] = std::exp(logs[j]);
  // exp can break ties produced by clamping only towards equality.
  for (std::size_t j = 1; j < blocks; ++j)
    P.primes[j] = std::max(P.primes[j], P.primes[j - 1]);
  return P;
}

std::size_t PiCount(const PrimeSequence& P, double x) {
  return static_cast<std::size_t>(
      std::upper_bound(P.primes.begin(), P.primes.end(), x) - P.primes.begin());
}

double DiscrepancyScale(double x, double t) {
  return std::sqrt(x) + std::sqrt(x * std::log(std::abs(t) + 1.0) / std::log(x + 1.0));
}

std::vector<double> ExpSumDiscrepancies(const PrimeSequence& P,
                                        const DensitySpec& spec,
                                        std::span<const double> xs, double t) {
  std::vector<double> out;
  out.reserve(xs.size());
  Complex integral = 0.0;
  Complex sum = 0.0;
  double w_prev = 0.0;
  std::size_t next_prime = 0;
  for (double x : xs) {
    Require(x >= 1.0, ErrorCode::kDomain, "discrepancy needs x >= 1");
    Require(x <= P.x_max * (1.0 + 1e-12), ErrorCode::kDomain,
            "discrepancy beyond the generation horizon");
    const double w = std::log(x);
    Require(w >= w_prev, ErrorCode::kInvalidArgument, "x grid must be increasing");
    if (w > w_prev) {
      const auto breaks = quad::Breakpoints(w_prev, w, DensityKnots(w_prev, w, spec));
      auto f = [&](double s) {
        return DensityLog(s, spec) * std::exp(s) * std::polar(1.0, -t * s);
      };
      const auto r = quad::IntegratePanels<Complex>(
          f, breaks, OscillationPanelWidth(w, spec, t));
      Require(r.error <= 1e-6 * std::max(1.0, std::abs(r.value)) + 1e-6,
              ErrorCode::kTolerance, "oscillatory integral above tolerance");
      integral += r.value;
    }
    for (; next_prime < P.primes.size() && P.primes[next_prime] <= x; ++next_prime)
      sum += std::polar(1.0, -t * std::log(P.primes[next_prime]));
    out.push_back(std::abs(sum - integral));
    w_prev = w;
  }
  return out;
}

double ExpSumDiscrepancy(const PrimeSequence& P, const DensitySpec& spec,
                         double x, double t) {
  const double xs[1] = {x};
  return ExpSumDiscrepancies(P, spec, xs, t)[0];
}

void SavePrimes(const PrimeSequence& P, const std::string& stem) {
  std::ofstream bin(stem + ".bin", std::ios::binary);
  Require(static_cast<bool>(bin), ErrorCode::kIo, "cannot write " + stem + ".bin");
  PutU64(bin, P.primes.size());
  for (double p : P.primes) PutU64(bin, std::bit_cast<std::uint64_t>(p));
  std::ofstream meta(stem + ".meta");
  Require(static_cast<bool>(meta), ErrorCode::kIo, "cannot write " + stem + ".meta");
  meta.precision(17);
  meta << "scheme=" << SchemeName(P.scheme) << "\n"
       << "seed=" << P.seed << "\n"
       << "beta=" << P.beta << "\n"
       << "K=" << P.K << "\n"
       << "mode=" << (P.mode == DensityMode::kFull ? "full" : "truncated") << "\n"
       << "x_max=" << P.x_max << "\n"
       << "mass=" << P.mass << "\n"
       << "count=" << P.primes.size() << "\n";
}

PrimeSequence LoadPrimes(const std::string& stem) {
  std::ifstream bin(stem + ".bin", std::ios::binary);
  Require(static_cast<bool>(bin), ErrorCode::kIo, "cannot read " + stem + ".bin");
  PrimeSequence P;
  const std::uint64_t n = GetU64(bin);
  P.primes.resize(n);
  for (auto& p : P.primes) p = std::bit_cast<double>(GetU64(bin));
  std::ifstream meta(stem + ".meta");
  Require(static_cast<bool>(meta), ErrorCode::kIo, "cannot read " + stem + ".meta");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(meta, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  try {
    P.scheme = ParseScheme(kv.at("scheme"));
    P.seed = std::stoull(kv.at("seed"));
    P.beta = std::stod(kv.at("beta"));
    P.K = std::stoi(kv.at("K"));
    P.mode = kv.at("mode") == "full" ? DensityMode::kFull : DensityMode::kTruncated;
    P.x_max = std::stod(kv.at("x_max"));
    P.mass = std::stod(kv.at("mass"));
    Require(std::stoull(kv.at("count")) == n, ErrorCode::kIo,
            "metadata count disagrees with binary file");
  } catch (const std::out_of_range&) {
    Fail(ErrorCode::kIo, "metadata record incomplete: " + stem + ".meta");
  } catch (const std::invalid_argument&) {
    Fail(ErrorCode::kIo, "metadata record malformed: " + stem + ".meta");
  }
  Require(std::is_sorted(P.primes.begin(), P.primes.end()), ErrorCode::kIo,
          "prime file is not sorted");
  return P;
}

}  // namespace beurling

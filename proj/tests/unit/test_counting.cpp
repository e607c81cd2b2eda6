#include <doctest.h>

#include <cmath>
#include <random>

#include "acceptance/oracles.hpp"
#include "core/counting.hpp"
#include "core/error.hpp"

using namespace beurling;

TEST_SUITE("counting") {

TEST_CASE("primes {2, 3} up to 10") {
  const std::vector<double> P = {2.0, 3.0};
  // 1 2 3 4 6 8 9
  CHECK(CountN(P, 10.0) == 7);
  CHECK(Psi(P, 10.0) == doctest::Approx(3 * std::log(2.0) + 2 * std::log(3.0)));
  // pi(10) + pi(sqrt 10)/2 + pi(10^{1/3})/3 = 2 + 1 + 1/3
  CHECK(PiRiemann(P, 10.0) == doctest::Approx(10.0 / 3.0));
  CHECK(PiFromPsi(P, 10.0) == doctest::Approx(10.0 / 3.0));
}

TEST_CASE("below the first prime") {
  const std::vector<double> P = {2.5, 7.0};
  CHECK(CountN(P, 2.4) == 1);
  CHECK(Psi(P, 2.4) == 0.0);
  CHECK(PiRiemann(P, 2.4) == 0.0);
  CHECK(CountN(P, 1.0) == 1);
}

TEST_CASE("two primes: N is a lattice point count") {
  const std::vector<double> P = {2.0, 3.5};
  for (double x : {5.0, 50.0, 777.0, 1e5}) {
    std::uint64_t expect = 0;
    for (int a = 0; std::pow(2.0, a) <= x; ++a)
      for (int b = 0; std::pow(2.0, a) * std::pow(3.5, b) <= x; ++b) ++expect;
    CHECK(CountN(P, x) == expect);
  }
}

TEST_CASE("DFS count equals brute force on random prime sets") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(1.2, 20.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> P(6);
    for (auto& p : P) p = U(rng);
    std::sort(P.begin(), P.end());
    for (double x : {10.0, 300.0, 5000.0}) {
      CHECK(CountN(P, x) == oracle::BruteForceCount(P, x));
      CHECK(CountN(P, x, kDefaultEnumerationHorizon, 3) == CountN(P, x));
    }
  }
}

TEST_CASE("Pi and pi_from_psi agree on a generated system") {
  DensitySpec spec{MakeParams(0.5, 2), DensityMode::kFull};
  const auto P = Generate(spec, 1e4, Scheme::kMedian, 1);
  for (double x : {50.0, 999.0, 9e3}) {
    CHECK(PiRiemann(P, x) == doctest::Approx(PiFromPsi(P, x)).epsilon(1e-12));
  }
  // psi = sum over prime-power atoms of weight * log(location)
  const auto m = PrimePowerMeasure(P.primes, 9e3 * (1 + 1e-12));
  double s = 0;
  for (const auto& a : m.atoms) s += a.weight * std::log(a.location);
  CHECK(s == doctest::Approx(Psi(P, 9e3)).epsilon(1e-12));
  CHECK_THROWS_AS(CountN(P, 2e4), Error);
}

TEST_CASE("enumeration horizon is enforced") {
  const std::vector<double> P = {2.0};
  CHECK_THROWS_AS(CountN(P, 1e8), Error);
  CHECK(CountN(P, 1e6, 1e6) == 20);
}

TEST_CASE("exp* of a single prime counts its powers") {
  const auto m = PrimePowerMeasure(std::vector<double>{2.0}, 1e4);
  const double h = 1.0 / 1024;
  const auto N = ExpStar(m, std::log(1e4), h);
  for (int n = 0; n < 13; ++n) {
    const double x = std::pow(2.0, n + 0.5);  // between 2^n and 2^{n+1}
    CHECK(N.At(x) == doctest::Approx(n + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("exp* of the zero measure is 1") {
  MixedMeasure m;
  const auto N = ExpStar(m, 3.0, 0.125);
  for (double v : N.values) CHECK(v == 1.0);
}

TEST_CASE("exp* brackets the exact count") {
  const std::vector<double> P = {2.0, 3.0, 5.0, 7.0, 11.0, 13.0};
  const double limit = 1e4, h = 1.0 / 4096;
  const auto m = PrimePowerMeasure(P, limit);
  const auto N = ExpStar(m, std::log(limit), h);
  for (double x = 20.5; x < 5e3; x *= 1.37) {
    const int omega = static_cast<int>(std::log(x) / std::log(2.0));
    const double lo = static_cast<double>(CountN(P, x * std::exp(-h)));
    const double hi = static_cast<double>(CountN(P, x * std::exp((omega + 1) * h)));
    CHECK(N.At(x) >= lo - 1e-9);
    CHECK(N.At(x) <= hi + 1e-9);
  }
}

TEST_CASE("exp* of a density matches the exponential series") {
  // f(u) = c/u, so dPi = c dw and N(e^W) = sum_n (c W)^n / n!^2 = I_0(2 sqrt(c W)).
  const double c = 0.5, h = 1.0 / 2048, W = 6.0;
  MixedMeasure m;
  m.h = h;
  m.w_start = 0.0;
  for (int i = 0; std::abs(i * h) <= W + 1e-12; ++i) m.density.push_back(c * std::exp(-i * h));
  const auto N = ExpStar(m, W, h);
  for (double w : {1.0, 3.0, 5.5}) {
    const double ref = std::cyl_bessel_i(0.0, 2.0 * std::sqrt(c * w));
    CHECK(N.At(std::exp(w) * (1 + 1e-12)) == doctest::Approx(ref).epsilon(2e-3));
  }
}

TEST_CASE("prime-power measure atoms") {
  const auto m = PrimePowerMeasure(std::vector<double>{2.0, 3.0}, 10.0);
  // 2, 3, 4, 8, 9
  REQUIRE(m.atoms.size() == 5);
  CHECK(m.atoms[0].location == 2.0);
  CHECK(m.atoms[2].weight == doctest::Approx(0.5));
  CHECK(m.atoms[3].weight == doctest::Approx(1.0 / 3));
}

}  // TEST_SUITE

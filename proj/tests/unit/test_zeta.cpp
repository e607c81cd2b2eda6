#include <doctest.h>

#include <cmath>
#include <complex>

#include "core/complex_g.hpp"
#include "core/counting.hpp"
#include "core/error.hpp"
#include "core/zeta.hpp"

using namespace beurling;

namespace {

Complex GRef(Complex z) { return 1.0 - (std::exp(-z) - std::exp(-2.0 * z)) / z; }

// s/(s-1) prod_{k<=K} G(l_k(s - rho_k)) G(l_k(s - conj rho_k)), written out.
Complex ZetaRef(double beta, int K, Complex s) {
  Complex z = s / (s - 1.0);
  for (int k = 1; k <= K; ++k) {
    const double l = std::pow(4.0, k);
    const Complex rho(1.0 - 1.0 / l, std::exp(std::pow(4.0, beta * k)));
    z *= GRef(l * (s - rho)) * GRef(l * (s - std::conj(rho)));
  }
  return z;
}

}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("zeta of a single atom") {
  MixedMeasure m;
  m.atoms.push_back({2.0, 1.0});
  const auto z = ZetaFromMeasure(m, Complex(2.0, 0.0));
  CHECK(z.value.real() == doctest::Approx(std::exp(0.25)));
  CHECK(std::abs(ZetaFromMeasure(MixedMeasure{}, Complex(0.3, 1.0)).value - 1.0) < 1e-15);
}

TEST_CASE("finite product against the written-out formula") {
  const auto p = MakeParams(0.5, 3);
  for (Complex s : {Complex(1.3, 5.0), Complex(0.6, 7.4), Complex(2.0, -55.0), Complex(0.95, 7.39)}) {
    for (int K : {1, 2, 3}) {
      const Complex ref = ZetaRef(0.5, K, s);
      CHECK(std::abs(ZetaCK(p, K, s) - ref) <= 1e-12 * std::abs(ref));
    }
  }
}

TEST_CASE("zeros of the finite product sit at rho_k + z_n / l_k") {
  const auto p = MakeParams(0.5, 2);
  const auto zeros = gfun::FindZeros(3);
  for (int k = 1; k <= 2; ++k) {
    const double l = std::pow(4.0, k);
    for (int n = 1; n <= 3; ++n) {
      const Complex s = p.Rho(k) + zeros[n].location / l;
      const Complex near = s + Complex(0.05, 0.0);
      CHECK(std::abs(ZetaCK(p, 2, s)) < 1e-9 * std::abs(ZetaCK(p, 2, near)));
    }
  }
}

TEST_CASE("certified product: symmetry, reality and agreement with large K") {
  const auto p = MakeParams(0.5, 3);
  const Complex s(1.4, 6.0);
  const auto a = ZetaCProduct(p, s);
  const auto b = ZetaCProduct(p, std::conj(s));
  CHECK(std::abs(a.value - std::conj(b.value)) < 1e-13 * std::abs(a.value));
  CHECK(a.error <= 1e-14);
  const auto r = ZetaCProduct(p, Complex(2.0, 0.0));
  CHECK(std::abs(r.value.imag()) < 1e-14);
  CHECK(r.value.real() > 0);
  CHECK(std::abs(ZetaCK(p, 5, s) - a.value) < 1e-12 * std::abs(a.value));
  CHECK_THROWS_AS(ZetaCProduct(p, Complex(0.9, 1.0)), Error);
  CHECK_THROWS_AS(ZetaCProduct(p, Complex(1.0, 0.0)), Error);
}

TEST_CASE("zeta from the continuous measure matches the product") {
  const auto p = MakeParams(0.5, 3);
  const DensitySpec spec{p, DensityMode::kFull};
  const auto m = ContinuousMeasure(spec, 1.0 / 2048, 64.0);
  for (Complex s : {Complex(2.0, 3.0), Complex(1.5, 7.39), Complex(3.0, -40.0)}) {
    const Complex ref = ZetaCProduct(p, s).value;
    CHECK(std::abs(ZetaFromMeasure(m, s).value - ref) <= 1e-6 * std::abs(ref));
  }
}

TEST_CASE("residue routes agree") {
  const auto p = MakeParams(0.5, 3);
  CHECK(ResidueAK(p, 0) == 1.0);
  for (int K = 1; K <= 3; ++K) {
    double ref = 1.0;
    for (int k = 1; k <= K; ++k) {
      const double l = std::pow(4.0, k);
      ref *= std::norm(GRef(Complex(1.0, -l * std::exp(std::pow(4.0, 0.5 * k)))));
    }
    CHECK(ResidueAK(p, K) == doctest::Approx(ref).epsilon(1e-13));
    const auto c = DensityAContinuous(p, K);
    CHECK(std::abs(c.value - ref) <= 1e-8);
  }
}

TEST_CASE("density from primes is stable in the horizon") {
  const auto p = MakeParams(0.5, 3);
  const DensitySpec spec{p, DensityMode::kFull};
  const auto P = Generate(spec, 1e5, Scheme::kMedian, 1);
  const auto a4 = DensityA(P, spec, 1e4);
  const auto a5 = DensityA(P, spec, 1e5);
  CHECK(std::abs(a4.value - a5.value) <= a4.error + a5.error);
  CHECK(a5.error < 1e-4 * a5.value);
  // N(x)/x approaches a: at 1e5 the relative gap is already small.
  const double n = static_cast<double>(CountN(P, 1e5));
  CHECK(std::abs(n / 1e5 - a5.value) < 0.01 * a5.value);
  CHECK_THROWS_AS(DensityA(P, spec, 2e5), Error);
}

TEST_CASE("gap against a direct sum and midpoint integral") {
  const auto p = MakeParams(0.5, 1);
  const DensitySpec spec{p, DensityMode::kFull};
  const auto P = Generate(spec, 3e3, Scheme::kMedian, 1);
  const Complex s(2.0, 1.0);
  const auto g = LogZetaGap(P, spec, 1, s);
  CHECK(g.truncated);
  const double X = g.crossover;
  CHECK(X <= 3e3);
  Complex sum = 0;
  for (double q : P.primes)
    for (int nu = 1; std::pow(q, nu) < X; ++nu) sum += std::pow(q, -double(nu) * s) / double(nu);
  const int n = 400000;
  const double W = std::log(X);
  Complex integral = 0;
  for (int i = 0; i < n; ++i) {
    const double w = (i + 0.5) * W / n;
    integral += DensityLog(w, spec) * std::exp((1.0 - s) * w) * (W / n);
  }
  CHECK(std::abs(g.gap - (sum - integral)) < 1e-6);
  const auto gc = LogZetaGap(P, spec, 1, std::conj(s));
  CHECK(std::abs(gc.gap - std::conj(g.gap)) < 1e-12);
  CHECK_THROWS_AS(LogZetaGap(P, spec, 1, Complex(0.7, 0.0)), Error);
}

TEST_CASE("bound categories") {
  const auto p = MakeParams(0.5, 2);
  const double g2 = p.Gamma(2);
  CHECK(ClassifyBound(p, 2, 0.9, 1.0, 1.0).name == "1");
  CHECK(ClassifyBound(p, 2, 0.9, 1.0, 1.0).shape == doctest::Approx(10.0));
  CHECK(ClassifyBound(p, 2, 0.9, 2.5 * g2, 1.0).name == "high");
  CHECK(ClassifyBound(p, 2, 0.9, g2 + 1.0, 1.0).name == "3a");
  CHECK(ClassifyBound(p, 2, 1.0 - 1.0 / 16, g2 + 0.01, 1.0).name == "3b");
  CHECK(ClassifyBound(p, 2, 0.9, 0.3 * g2, 1.0).name == "2");
  CHECK(Sigma1(0.5, 16.0) == doctest::Approx(1.0 - 0.5 / 4.0));
  CHECK(SigmaOfT(std::exp(4.0), 16.0) == doctest::Approx(1.0 - 1.0 / 16.0));
}

}  // TEST_SUITE

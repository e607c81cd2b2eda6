#include <doctest.h>

#include <cmath>
#include <complex>

#include "core/complex_g.hpp"
#include "core/error.hpp"
#include "core/gdensity.hpp"

using namespace beurling;

namespace {

// Irwin-Hall density of the sum of n uniforms on [0, 1].
long double IrwinHall(int n, long double t) {
  if (t < 0 || t > n) return 0;
  long double sum = 0, binom = 1, fact = 1;
  for (int i = 1; i < n; ++i) fact *= i;
  for (int k = 0; k <= n && k <= t; ++k) {
    sum += ((k % 2) ? -1 : 1) * binom * std::pow(t - k, n - 1);
    binom = binom * (n - k) / (k + 1);
  }
  return sum / fact;
}

// g(e^w) = sum_n IH_n(w - n) / n, all n with n <= w.
long double GRef(long double w) {
  long double s = 0;
  for (int n = 1; n <= w; ++n) s += IrwinHall(n, w - n) / n;
  return s;
}

}  // namespace

TEST_SUITE("gdensity") {

TEST_CASE("convolution powers are Irwin-Hall densities") {
  const auto& g = GDensity::Default();
  for (int n : {1, 2, 3, 5, 9, 12}) {
    const auto& p = g.ConvolutionPower(n);
    for (double t = 0.03; t < n; t += 0.17) {
      CHECK(p.Eval(n + t) == doctest::Approx(static_cast<double>(IrwinHall(n, t))).epsilon(1e-11));
    }
    CHECK(p.Eval(n - 0.01) == 0.0);
    CHECK(p.Eval(2.0 * n + 0.01) == 0.0);
  }
  CHECK_THROWS_AS(g.ConvolutionPower(0), Error);
}

TEST_CASE("convolution powers integrate to 1") {
  const auto& g = GDensity::Default();
  for (int n : {1, 4, 20, 40}) {
    const auto& p = g.ConvolutionPower(n);
    const int m = 4000;
    double s = 0;
    for (int i = 0; i < m; ++i) s += p.Eval(n + (i + 0.5) * n / m);
    CHECK(s * n / m == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("g against the summed closed form") {
  const auto& g = GDensity::Default();
  for (double w = 0.5; w < 13.0; w += 0.237) {
    CHECK(g.EvalLog(w) == doctest::Approx(static_cast<double>(GRef(w))).epsilon(1e-10));
  }
}

TEST_CASE("g is 0 below 1, 1 on (1,2) and jumps at 2") {
  const auto& g = GDensity::Default();
  CHECK(g.EvalLog(0.99) == 0.0);
  CHECK(g.EvalLog(1.0) == 1.0);
  CHECK(g.EvalLog(1.7) == 1.0);
  CHECK(g.EvalLogLeft(2.0) == doctest::Approx(1.0));
  CHECK(g.EvalLog(2.0) == doctest::Approx(0.0));
  CHECK(EvalGDensity(std::exp(1.5)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(g.EvalLog(g.w_limit()), Error);
}

TEST_CASE("derivative matches finite differences") {
  const auto& g = GDensity::Default();
  const double h = 1e-6;
  for (double w : {5.3, 7.71, 12.05, 30.4}) {
    const double fd = (g.EvalLog(w + h) - g.EvalLog(w - h)) / (2 * h);
    CHECK(g.DerivativeLog(w) == doctest::Approx(fd).epsilon(1e-5));
  }
  const double u = std::exp(9.3);
  const double du = u * 1e-7;
  const double fd = (EvalGDensity(u + du) - EvalGDensity(u - du)) / (2 * du);
  CHECK(EvalGDensityDerivative(u) == doctest::Approx(fd).epsilon(1e-5));
  CHECK_THROWS_AS(EvalGDensityDerivative(std::exp(4.0)), Error);
}

TEST_CASE("g(u) log u tends to 1") {
  const auto& g = GDensity::Default();
  CHECK(std::abs(g.EvalLog(60.3) * 60.3 - 1.0) < 1e-6);
  CHECK(std::abs(g.EvalLog(30.3) * 30.3 - 1.0) < 1e-3);
}

TEST_CASE("Mellin transform reproduces log G") {
  const Complex pts[] = {{1.0, 0.0}, {0.7, 3.0}, {2.0, -25.0}, {0.5, 9.0}};
  for (Complex z : pts) {
    const auto r = MellinLogG(z, 1e-10);
    CHECK(std::abs(r.value - gfun::LogG(z)) < 1e-9);
    CHECK(r.tail_bound <= 1e-10);
  }
  // Slow decay: the table cannot certify a tight tail this close to the axis.
  CHECK_THROWS_AS(MellinLogG(Complex(0.05, 9.0), 1e-12), Error);
  CHECK_THROWS_AS(MellinLogG(Complex(0.0, 1.0)), Error);
}

TEST_CASE("decay survey produces a slope and stable scaled windows") {
  const auto s = SurveyDecay(5, 10, 200);
  CHECK(s.windows.size() == 5);
  CHECK(s.slope < 0.0);
  CHECK(DecayExponent() == doctest::Approx(-0.5 * std::log(M_PI / 2)));
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <complex>

#include "core/complex_g.hpp"
#include "core/error.hpp"

using namespace beurling;
using namespace beurling::gfun;

namespace {

// Direct closed form in long double, away from z = 0.
std::complex<long double> GRef(std::complex<long double> z) {
  return 1.0L - (std::exp(-z) - std::exp(-2.0L * z)) / z;
}

Complex ToD(std::complex<long double> z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

TEST_SUITE("complexfn") {

TEST_CASE("G at 1 matches the closed form") {
  const double expected = 1.0 - (std::exp(-1.0) - std::exp(-2.0));
  CHECK(EvalG(Complex(1, 0)).real() == doctest::Approx(expected).epsilon(1e-15));
  CHECK(EvalG(Complex(1, 0)).real() == doctest::Approx(0.7674558).epsilon(1e-7));
  CHECK(std::abs(EvalG(Complex(1, 0)).imag()) < 1e-16);
}

TEST_CASE("log G at 1 is the real log of G(1)") {
  const double expected = std::log(1.0 - (std::exp(-1.0) - std::exp(-2.0)));
  const Complex v = LogG(Complex(1, 0));
  CHECK(v.real() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(v.real() == doctest::Approx(-0.264674336).epsilon(1e-8));
  CHECK(std::abs(v.imag()) < 1e-16);
}

TEST_CASE("G agrees with long double closed form across the plane") {
  const Complex pts[] = {{0.3, 0.1}, {-0.7, 2.5}, {2.0, -9.0}, {-1.0, 40.0}, {5.0, 0.5},
                         {0.02, 0.0}, {0.0, 0.011}};
  for (Complex z : pts) {
    const Complex ref = ToD(GRef({z.real(), z.imag()}));
    CHECK(std::abs(EvalG(z) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("Taylor branch is continuous at its radius") {
  for (double r : {kTaylorRadius * 0.999, kTaylorRadius * 1.001}) {
    for (double arg : {0.0, 1.0, 2.5, -2.0}) {
      const Complex z = std::polar(r, arg);
      const Complex ref = ToD(GRef({z.real(), z.imag()}));
      CHECK(std::abs(EvalG(z) - ref) < 1e-14);
    }
  }
  CHECK(std::abs(EvalG(Complex(0, 0))) == 0.0);
}

TEST_CASE("G' matches central differences") {
  const Complex pts[] = {{0.5, 0.5}, {-0.4, 4.0}, {1.5, -3.0}, {0.004, 0.002}};
  const double h = 1e-5;
  for (Complex z : pts) {
    const Complex fd = (EvalG(z + h) - EvalG(z - h)) / (2 * h);
    CHECK(std::abs(EvalGPrime(z) - fd) < 1e-8);
  }
}

TEST_CASE("conjugate symmetry") {
  const Complex z(-0.3, 7.2);
  CHECK(std::abs(EvalG(std::conj(z)) - std::conj(EvalG(z))) < 1e-15);
}

TEST_CASE("log G exponentiates back and refuses Re z <= 0") {
  for (Complex z : {Complex(0.1, 30.0), Complex(0.05, 0.0), Complex(3.0, -2.0)}) {
    CHECK(std::abs(std::exp(LogG(z)) - EvalG(z)) < 1e-13);
    CHECK(std::abs(LogG(z).imag()) < M_PI);
  }
  CHECK_THROWS_AS(LogG(Complex(0.0, 1.0)), Error);
  CHECK_THROWS_AS(LogG(Complex(-1.0, 1.0)), Error);
}

TEST_CASE("first zero location and certification") {
  const auto zeros = FindZeros(50);
  REQUIRE(zeros.size() == 51);
  CHECK(zeros[0].location == Complex(0, 0));
  CHECK(zeros[1].location.real() == doctest::Approx(-0.512724).epsilon(1e-5));
  CHECK(zeros[1].location.imag() == doctest::Approx(4.025554).epsilon(1e-6));
  for (std::size_t n = 1; n < zeros.size(); ++n) {
    const auto& z = zeros[n];
    CHECK(z.rect_winding == 1);
    CHECK(z.strip_winding == 1);
    CHECK(std::abs(EvalG(z.location)) < 1e-10);
    CHECK(z.location.imag() > n * M_PI);
    CHECK(z.location.imag() < (n + 1) * M_PI);
    CHECK(z.location.real() < -0.5 * std::log(n * M_PI / 2));
  }
}

TEST_CASE("winding number counts zeros in a rectangle") {
  // Accurate enough to round, which is all the certification needs.
  CHECK(std::abs(WindingNumber(0.5, 2.0, -1.0, 1.0)) < 1e-3);
  CHECK(std::abs(WindingNumber(-0.5, 0.5, -0.5, 0.5) - 1.0) < 1e-3);
  CHECK(std::abs(WindingNumber(-1.5, 0.5, -4.5, 4.5) - 3.0) < 1e-3);
}

TEST_CASE("bound checks hold on random samples and are seed deterministic") {
  const auto a = CheckGBounds(4000, 7);
  const auto b = CheckGBounds(4000, 7);
  CHECK(a.samples == 4000);
  CHECK(a.approx_violations == 0);
  CHECK(a.bound_violations == 0);
  CHECK(a.max_approx_ratio == b.max_approx_ratio);
}

}  // TEST_SUITE

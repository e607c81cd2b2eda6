#include <doctest.h>

#include <cmath>
#include <complex>

#include "core/analysis.hpp"
#include "core/error.hpp"
#include "core/gdensity.hpp"

using namespace beurling;

namespace {

// I_k exactly: with s = w/l, I_k = l Re int_1^{S} s g(e^s) e^{z s} ds,
// z = l(1 - 1/l) + i gamma l, integrated piece by piece on the g table through
// J_j = int_0^T tau^j e^{z tau} dtau = T^j e^{zT}/z - (j/z) J_{j-1}.
double IkExact(double beta, int k, double log_x) {
  using C = std::complex<long double>;
  const long double l = std::pow(4.0L, k);
  const long double gamma = std::exp(std::pow(4.0L, beta * k));
  const C z(l - 1.0L, gamma * l);
  const long double S = log_x / l;
  const auto& table = GDensity::Default().Table();
  const auto& knots = table.knots();
  C total = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const long double a = std::max<long double>(knots[i], 1.0L);
    const long double b = std::min<long double>(knots[i + 1], S);
    if (b <= a) continue;
    // s g(e^s) on this piece as a polynomial in tau = s - a.
    const auto& c = table.pieces()[i];
    const long double shift = a - knots[i];
    std::vector<long double> q(c.size(), 0.0L);  // g in tau
    for (std::size_t j = 0; j < c.size(); ++j) {
      long double binom = 1;
      for (std::size_t m = 0; m <= j; ++m) {
        q[m] += c[j] * binom * std::pow(shift, static_cast<long double>(j - m));
        binom = binom * (j - m) / (m + 1);
      }
    }
    std::vector<long double> p(q.size() + 1, 0.0L);  // (a + tau) g
    for (std::size_t j = 0; j < q.size(); ++j) {
      p[j] += a * q[j];
      p[j + 1] += q[j];
    }
    const long double T = b - a;
    const C eT = std::exp(z * T);
    C J = (eT - 1.0L) / z;
    C piece = p[0] * J;
    long double Tj = 1;
    for (std::size_t j = 1; j < p.size(); ++j) {
      Tj *= T;
      J = Tj * eT / z - static_cast<long double>(j) / z * J;
      piece += p[j] * J;
    }
    total += piece * std::exp(z * a);
  }
  return static_cast<double>(l * total.real());
}

// psi_C(x) = int_0^{log x} f(e^w) w e^w dw by composite midpoint.
double PsiCMidpoint(const DensitySpec& spec, double log_x, int n) {
  double s = 0;
  const double h = log_x / n;
  for (int i = 0; i < n; ++i) {
    const double w = (i + 0.5) * h;
    s += DensityLog(w, spec) * w * std::exp(w);
  }
  return s * h;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("level of x") {
  CHECK(LevelOf(3.99) == 0);
  CHECK(LevelOf(4.0) == 1);
  CHECK(LevelOf(15.9) == 1);
  CHECK(LevelOf(32.0) == 2);
  CHECK(LevelOf(64.0) == 3);
}

TEST_CASE("envelope at beta = 1/2, log x = 32") {
  const auto e = EnvelopeAt(0.5, 32.0);
  CHECK(e.lambda_max == doctest::Approx(16.0));
  CHECK(e.mu == 2.0);
  CHECK(e.k0 == 2);
  CHECK(e.log_E == doctest::Approx(26.0));
}

TEST_CASE("envelope exponent is the maximum over lambda") {
  for (double beta : {0.3, 0.5, 0.8, 1.0}) {
    for (double L : {10.0, 50.0, 300.0}) {
      const auto e = EnvelopeAt(beta, L);
      const double at_max = -L / e.lambda_max - std::pow(e.lambda_max, beta);
      CHECK(e.log_E - L == doctest::Approx(at_max).epsilon(1e-12));
      for (double f : {0.8, 1.25}) {
        const double lam = e.lambda_max * f;
        CHECK(-L / lam - std::pow(lam, beta) < at_max);
      }
    }
  }
  CHECK(EnvelopeAt(1.0, 4.0).log_E == doctest::Approx(0.0));
}

TEST_CASE("I_k quadrature against the exact piecewise integral") {
  const auto p = MakeParams(0.5, 3);
  for (auto [k, L] : {std::pair{1, 6.3}, {1, 11.7}, {1, 30.0}, {2, 40.0}, {2, 63.5}, {3, 70.0}}) {
    const auto q = Ik(p, k, L, IkMethod::kQuadrature);
    const double ref = IkExact(0.5, k, L);
    CHECK(std::abs(q.value - ref) <= 1e-8 * std::max(1.0, std::abs(ref)));
  }
  CHECK(Ik(p, 2, 16.0, IkMethod::kQuadrature).value == 0.0);
  CHECK_THROWS_AS(Ik(p, 2, 15.0, IkMethod::kQuadrature), Error);
}

TEST_CASE("asymptotic I_k stays within its uncertainty") {
  const auto p = MakeParams(0.5, 3);
  for (double L : {8.0, 20.0, 40.0}) {
    const auto q = Ik(p, 1, L, IkMethod::kQuadrature);
    const auto a = Ik(p, 1, L, IkMethod::kAsymptotic);
    CHECK(std::abs(q.value - a.value) <= a.uncertainty);
  }
  CHECK_THROWS_AS(Ik(p, 1, 20.0, IkMethod::kAsymptotic, true), Error);
  CHECK_NOTHROW(Ik(p, 1, 70.0, IkMethod::kAsymptotic, true));
}

TEST_CASE("psi_C below e^4 is x - 1 - log x") {
  const auto p = MakeParams(0.5, 3);
  for (double L : {0.5, 2.0, 3.9}) {
    const auto v = PsiC(p, L, IkMethod::kQuadrature);
    CHECK(v.psiC == doctest::Approx(std::exp(L) - 1 - L).epsilon(1e-14));
    CHECK(v.terms.empty());
  }
  CHECK(PsiC(p, 0.0, IkMethod::kQuadrature).psiC == 0.0);
}

TEST_CASE("psi_C matches direct integration of f log u") {
  const auto p = MakeParams(0.5, 3);
  const DensitySpec spec{p, DensityMode::kFull};
  for (double L : {7.0, 12.5}) {
    const double ref = PsiCMidpoint(spec, L, 2000000);
    CHECK(PsiC(p, L, IkMethod::kQuadrature).psiC == doctest::Approx(ref).epsilon(1e-7));
  }
}

TEST_CASE("dominant term classification") {
  const auto p = MakeParams(0.5, 5);
  const auto d = ClassifyDominantTerms(p, 32.0);
  CHECK(d.mu_frac == 0.0);
  CHECK(d.dominant == Dominance::kLower);
  CHECK(d.precondition_met);
  // mu = 2.5 at lambda = 32: log x = beta lambda^{beta+1} = 0.5 * 32^{1.5}
  const auto mid = ClassifyDominantTerms(p, 0.5 * std::pow(32.0, 1.5));
  CHECK(mid.mu_frac == doctest::Approx(0.5));
  CHECK(mid.dominant == Dominance::kNeither);
  CHECK_THROWS_AS(ClassifyDominantTerms(MakeParams(0.5, 3), 32.0, true), Error);
}

TEST_CASE("oscillation scan records the normalized deviation") {
  const auto p = MakeParams(0.5, 3);
  const auto scan = ScanOscillation(p, 12.0, 0.05);
  REQUIRE(scan.records.size() >= 64);
  for (const auto& r : scan.records) {
    CHECK(r.ratio == doctest::Approx((std::exp(r.log_x) - r.psiC) / r.E).epsilon(1e-9));
  }
  const auto hi = OscillationSearch(p, 12.0, 0.05, 1);
  const auto lo = OscillationSearch(p, 12.0, 0.05, -1);
  CHECK(hi.ratio >= lo.ratio);
  CHECK(hi.ratio == scan.records[scan.argmax].ratio);
  const auto scan2 = ScanOscillation(p, 12.0, 0.05, 3);
  CHECK(scan2.records[scan2.argmax].ratio == scan.records[scan.argmax].ratio);
}

TEST_CASE("Perron identity with zeta = 1") {
  // N = 1 everywhere: int_1^x N = x - 1.
  GridFunction N{1.0 / 64, std::vector<double>(400, 1.0)};
  const double x = 10.0;
  const auto r = PerronCheck([](Complex) { return Complex(1.0, 0.0); }, N, x, 1.25, 1e5);
  CHECK(r.lhs == doctest::Approx(x - 1));
  CHECK(r.gap <= r.tail + 1e-6);
}

TEST_CASE("Perron check for the continuous system below e^4") {
  const auto r = PerronCheck(MakeParams(0.5, 1), 1, 50.0, 1.25, 2e4, 1.0 / 1024, 0.01);
  // f_{C,1} = (1 - 1/u)/log u below e^4, whose exp* has N(u) = u in the limit h -> 0.
  CHECK(r.lhs == doctest::Approx(0.5 * (50.0 * 50.0 - 1.0)).epsilon(2e-3));
  CHECK(r.relative < 0.05);
}

TEST_CASE("N error profile") {
  const std::vector<double> P = {2.0, 3.0};
  const std::vector<double> xs = {10.0, 100.0};
  PrimeSequence seq;
  seq.primes = P;
  seq.x_max = 1e3;
  const auto prof = NErrorProfileRun(seq, 0.0, 0.5, xs);
  REQUIRE(prof.rows.size() == 2);
  CHECK(prof.rows[0].N == 7.0);
  CHECK(prof.rows[0].rel_error == doctest::Approx(0.7));
  // one closed window [10, 100] holding both rows
  REQUIRE(prof.decade_lo.size() == 1);
  CHECK(prof.decade_lo[0] == doctest::Approx(10.0));
  const double n100 = static_cast<double>(CountN(P, 100.0));
  CHECK(prof.decade_median[0] == doctest::Approx(0.5 * (0.7 + n100 / 100.0)));
  CHECK_FALSE(prof.medians_decreasing);  // a single window shows no trend
}

}  // TEST_SUITE

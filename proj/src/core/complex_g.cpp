#include "core/complex_g.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace beurling::gfun {
namespace {

constexpr double kPi = std::numbers::pi;

// e^{z} - 1 accurate near 0.
Complex Expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// S(z) = (e^{-z} - e^{-2z}) / z.
Complex SmallS(Complex z) {
  // sum_{j>=0} (-1)^j (2^{j+1}-1) z^j / (j+1)!, degree 10
  Complex sum = 0.0;
  for (int j = 10; j >= 0; --j) {
    double fact = 1.0;
    for (int i = 2; i <= j + 1; ++i) fact *= i;
    const double c = ((j % 2) ? -1.0 : 1.0) * (std::ldexp(1.0, j + 1) - 1.0) / fact;
    sum = sum * z + c;
  }
  return sum;
}

Complex S(Complex z) {
  if (std::abs(z) < kTaylorRadius) return SmallS(z);
  return -std::exp(-z) * Expm1(-z) / z;
}

}  // namespace

Complex EvalG(Complex z) {
  if (std::abs(z) < kTaylorRadius) {
    // 1 - S(z) with the constant term cancelled analytically.
    Complex sum = 0.0;
    for (int j = 10; j >= 1; --j) {
      double fact = 1.0;
      for (int i = 2; i <= j + 1; ++i) fact *= i;
      const double c = ((j % 2) ? -1.0 : 1.0) * (std::ldexp(1.0, j + 1) - 1.0) / fact;
      sum = sum * z + c;
    }
    return -sum * z;
  }
  return 1.0 - S(z);
}

Complex GMinusOne(Complex z) { return -S(z); }

Complex EvalGPrime(Complex z) {
  if (std::abs(z) < kTaylorRadius) {
    // -S'(z)
    Complex sum = 0.0;
    for (int j = 10; j >= 1; --j) {
      double fact = 1.0;
      for (int i = 2; i <= j + 1; ++i) fact *= i;
      const double c = ((j % 2) ? -1.0 : 1.0) * (std::ldexp(1.0, j + 1) - 1.0) / fact;
      sum = sum * z + c * j;
    }
    return -sum;
  }
  const Complex e1 = std::exp(-z);
  const Complex e2 = std::exp(-2.0 * z);
  return (e1 - e2) / (z * z) - (-e1 + 2.0 * e2) / z;
}

Complex LogG(Complex z) {
  Require(z.real() > 0.0, ErrorCode::kDomain, "log_G requires Re z > 0");
  const Complex w = GMinusOne(z);
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double im = std::atan2(w.imag(), 1.0 + w.real());
  return {re, im};
}

double WindingNumber(double x_lo, double x_hi, double y_lo, double y_hi) {
  const Complex corners[5] = {{x_lo, y_lo}, {x_hi, y_lo}, {x_hi, y_hi},
                              {x_lo, y_hi}, {x_lo, y_lo}};
  auto estimate = [&](int per_edge) {
    Complex total = 0.0;
    for (int e = 0; e < 4; ++e) {
      const Complex a = corners[e];
      const Complex d = (corners[e + 1] - a) / static_cast<double>(per_edge);
      Complex edge = 0.0;
      for (int i = 0; i <= per_edge; ++i) {
        const Complex z = a + d * static_cast<double>(i);
        const Complex v = EvalGPrime(z) / EvalG(z);
        edge += (i == 0 || i == per_edge) ? 0.5 * v : v;
      }
      total += edge * d;
    }
    return (total / Complex(0.0, 2.0 * kPi)).real();
  };
  double prev = estimate(32);
  for (int n = 64; n <= (1 << 18); n *= 2) {
    const double cur = estimate(n);
    if (std::abs(cur - prev) < 0.05 && std::abs(cur - std::round(cur)) < 0.1)
      return cur;
    prev = cur;
  }
  Fail(ErrorCode::kConvergence, "winding number did not settle");
}

std::vector<GZero> FindZeros(int n_max, double b_cap) {
  Require(n_max >= 1, ErrorCode::kInvalidArgument, "n_max must be >= 1");
  std::vector<GZero> out;
  out.push_back({0, {0.0, 0.0}, 0.0, 1, 1});
  for (int n = 1; n <= n_max; ++n) {
    const double scale = std::log(n * kPi / 2.0);
    Complex z(-scale, (n + 0.5) * kPi);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const Complex g = EvalG(z);
      Complex step = g / EvalGPrime(z);
      // Damping: never move more than 1 per iteration.
      if (std::abs(step) > 1.0) step /= std::abs(step);
      double lambda = 1.0;
      Complex next = z - step;
      while (std::abs(EvalG(next)) > std::abs(g) && lambda > 1e-4) {
        lambda *= 0.5;
        next = z - lambda * step;
      }
      z = next;
      if (std::abs(EvalG(z)) <= 1e-14 * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    // Polish to the floating-point floor.
    for (int it = 0; it < 3; ++it) z -= EvalG(z) / EvalGPrime(z);
    const double residual = std::abs(EvalG(z));
    if (!converged && residual > 1e-12) {
      std::ostringstream msg;
      msg << "Newton failed for zero n=" << n << " (|G|=" << residual << ")";
      Fail(ErrorCode::kConvergence, msg.str());
    }
    GZero zero;
    zero.index = n;
    zero.location = z;
    zero.residual = residual;
    const double y_lo = n * kPi;
    const double y_hi = (n + 1) * kPi;
    zero.rect_winding = static_cast<int>(
        std::lround(WindingNumber(z.real() - 1.0, z.real() + 1.0, y_lo, y_hi)));
    zero.strip_winding = static_cast<int>(
        std::lround(WindingNumber(-b_cap * scale, 1.0, y_lo, y_hi)));
    if (zero.rect_winding != 1 || zero.strip_winding != 1) {
      std::ostringstream msg;
      msg << "zero n=" << n << " certification failed: rect winding "
          << zero.rect_winding << ", strip winding " << zero.strip_winding;
      Fail(ErrorCode::kCertification, msg.str());
    }
    out.push_back(zero);
  }
  return out;
}

BoundsReport CheckGBounds(std::int64_t sample_count, std::uint64_t seed) {
  Require(sample_count >= 1, ErrorCode::kInvalidArgument, "sample_count must be >= 1");
  const double cap = 1.0 + std::exp(2.0) - std::exp(1.0);
  Rng rng(seed);
  BoundsReport rep;
  for (std::int64_t i = 0; i < sample_count; ++i) {
    const double x = -1.0 + 4.0 * rng.Uniform();
    const double y = -50.0 + 100.0 * rng.Uniform();
    const Complex z(x, y);
    if (z == Complex(0.0, 0.0)) continue;
    ++rep.samples;
    const Complex g = EvalG(z);
    const double approx = (std::exp(-x) + std::exp(-2.0 * x)) / std::abs(z);
    const double r1 = std::abs(g - 1.0) / approx;
    if (r1 > rep.max_approx_ratio) {
      rep.max_approx_ratio = r1;
      rep.worst_approx_sample = z;
    }
    if (r1 > 1.0 + 1e-12) ++rep.approx_violations;
    const double r2 = std::abs(g) / cap;
    if (r2 > rep.max_bound_ratio) {
      rep.max_bound_ratio = r2;
      rep.worst_bound_sample = z;
    }
    if (r2 > 1.0 + 1e-12) ++rep.bound_violations;
  }
  return rep;
}

double LowerBoundWitness(const std::vector<GZero>& zeros) {
  double m = 0.0;
  for (const auto& z : zeros) {
    if (z.index < 1) continue;
    m = std::max(m, -z.location.real() / std::log(z.index * kPi / 2.0));
  }
  return m;
}

}  // namespace beurling::gfun

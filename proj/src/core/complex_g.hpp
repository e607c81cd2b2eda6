#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace beurling {

using Complex = std::complex<double>;

// G(z) = 1 - (e^{-z} - e^{-2z}) / z, entire, G(0) = 0.
namespace gfun {

inline constexpr double kTaylorRadius = 1e-2;

Complex EvalG(Complex z);
Complex EvalGPrime(Complex z);

// G(z) - 1 without cancellation for large Re z.
Complex GMinusOne(Complex z);

// Branch of log G on Re z > 0 tending to 0 as Re z -> +inf. There
// |G(z) - 1| = |int_1^2 e^{-zu} du| < 1, so the principal log1p branch is the
// continuous one. Throws kDomain for Re z <= 0.
Complex LogG(Complex z);

struct GZero {
  int index = 0;
  Complex location;
  double residual = 0.0;     // |G(z_n)|
  int rect_winding = 0;      // zeros in [x_n-1, x_n+1] x [n pi, (n+1) pi]
  int strip_winding = 0;     // zeros in [-b_cap log(n pi/2), 1] x [n pi, (n+1) pi]
};

// Zeros z_0 = 0 and z_n, 1 <= n <= n_max, upper half plane (conjugates
// implied). Each is certified by winding counts; a count other than 1 raises
// kCertification.
std::vector<GZero> FindZeros(int n_max, double b_cap = 5.0);

// Winding number of G around the axis-aligned rectangle, by trapezoid
// quadrature of G'/G on its edges with doubling refinement.
double WindingNumber(double x_lo, double x_hi, double y_lo, double y_hi);

struct BoundsReport {
  std::int64_t samples = 0;
  std::int64_t approx_violations = 0;   // |G-1| > (e^{-x}+e^{-2x})/|z|
  std::int64_t bound_violations = 0;    // |G| > 1 + e^2 - e for x >= -1
  double max_approx_ratio = 0.0;        // |G-1| / ((e^{-x}+e^{-2x})/|z|)
  double max_bound_ratio = 0.0;         // |G| / (1 + e^2 - e)
  Complex worst_approx_sample;
  Complex worst_bound_sample;
};

// Seeded uniform samples in [-1, 3] x [-50, 50].
BoundsReport CheckGBounds(std::int64_t sample_count, std::uint64_t seed);

// Empirical max over 1..n of -x_n / log(n pi / 2).
double LowerBoundWitness(const std::vector<GZero>& zeros);

}  // namespace gfun
}  // namespace beurling

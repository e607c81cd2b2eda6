#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <cstddef>
#include <span>
#include <vector>

#include "core/parallel.hpp"

namespace beurling::quad {

using Complex = std::complex<double>;

template <typename T>
struct Result {
  T value{};
  double error = 0.0;  // absolute error estimate
};

// Gauss-Legendre rules on [-1, 1] (full node sets, ascending).
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const Rule& GaussLegendre16();
const Rule& GaussLegendre8();
const Rule& GaussLegendre2();

// Sorted, de-duplicated breakpoints restricted to [a, b], always including
// both ends.
std::vector<double> Breakpoints(double a, double b, std::vector<double> interior);

// Appends every multiple m*step (m integer) that lies strictly inside (a, b).
void AppendMultiples(double a, double b, double step, std::vector<double>& out);

// Composite GL16 over [breaks.front(), breaks.back()]: each segment between
// consecutive breakpoints is cut into equal panels no wider than max_width.
// Error estimate is the summed |GL16 - GL8| per panel.
template <typename T, typename F>
Result<T> IntegratePanels(F&& f, std::span<const double> breaks,
                          double max_width) {
  const Rule& r16 = GaussLegendre16();
  const Rule& r8 = GaussLegendre8();
  std::vector<T> values;
  double err = 0.0;
  for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
    const double a = breaks[s];
    const double b = breaks[s + 1];
    if (!(b > a)) continue;
    const auto panels = static_cast<std::size_t>(
        std::max(1.0, std::ceil((b - a) / max_width - 1e-12)));
    const double width = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = a + width * static_cast<double>(p);
      const double hi = (p + 1 == panels) ? b : lo + width;
      const double half = 0.5 * (hi - lo);
      const double mid = 0.5 * (hi + lo);
      T q16{};
      for (std::size_t i = 0; i < r16.nodes.size(); ++i)
        q16 += r16.weights[i] * f(mid + half * r16.nodes[i]);
      T q8{};
      for (std::size_t i = 0; i < r8.nodes.size(); ++i)
        q8 += r8.weights[i] * f(mid + half * r8.nodes[i]);
      values.push_back(half * q16);
      err += std::abs(half * (q16 - q8));
    }
  }
  return {PairwiseSum(values), err};
}

template <typename T, typename F>
Result<T> IntegratePanels(F&& f, const std::vector<double>& breaks,
                          double max_width) {
  return IntegratePanels<T>(std::forward<F>(f),
                            std::span<const double>(breaks), max_width);
}

// Adaptive Gauss-Kronrod (G15/K31) on [a, b] for smooth real integrands.
Result<double> Adaptive(const std::function<double(double)>& f, double a,
                        double b, double tol);

// Exact-weight integral of p(tau) * exp(-z * tau) over [0, length], where p is
// given by monomial coefficients in tau. Large |z| uses the terminating
// integration-by-parts series (Filon-type, exact for polynomials); moderate
// |z| uses GL16 panels resolving the oscillation.
Complex PolyExpIntegral(std::span<const double> coeffs, Complex z,
                        double length);

// Filon-Simpson rule: integral of f(w) * exp(c * w) over the uniform grid
// w_i = w0 + i*h (i = 0..n-1). f is interpolated piecewise quadratically and
// the exponential is integrated exactly. A trailing odd cell is handled by the
// linear (Filon-trapezoid) variant.
Complex FilonSimpson(std::span<const double> values, double w0, double h,
                     Complex c);

}  // namespace beurling::quad

#include "core/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace beurling::quad {
namespace {

template <unsigned N>
Rule MakeRule() {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  Rule r;
  // Boost stores the non-negative half; mirror it.
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] == 0.0) continue;
    r.nodes.push_back(-x[i]);
    r.weights.push_back(w[i]);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.nodes.push_back(x[i]);
    r.weights.push_back(w[i]);
  }
  return r;
}

// mu_k = integral_0^L tau^k e^{c tau} dtau, k = 0, 1, 2.
std::array<Complex, 3> Moments(Complex c, double L) {
  const Complex cl = c * L;
  std::array<Complex, 3> mu{};
  if (std::abs(cl) < 1.0) {
    // L^{k+1} * sum_n (cL)^n / (n! (n+k+1))
    for (int k = 0; k < 3; ++k) {
      Complex term = 1.0;
      Complex sum = 0.0;
      for (int n = 0; n < 30; ++n) {
        sum += term / static_cast<double>(n + k + 1);
        term *= cl / static_cast<double>(n + 1);
      }
      mu[k] = sum * std::pow(L, k + 1);
    }
    return mu;
  }
  const Complex e = std::exp(cl);
  mu[0] = (e - 1.0) / c;
  mu[1] = (L * e - mu[0]) / c;
  mu[2] = (L * L * e - 2.0 * mu[1]) / c;
  return mu;
}

}  // namespace

const Rule& GaussLegendre16() {
  static const Rule rule = MakeRule<16>();
  return rule;
}
const Rule& GaussLegendre8() {
  static const Rule rule = MakeRule<8>();
  return rule;
}
const Rule& GaussLegendre2() {
  static const Rule rule = MakeRule<2>();
  return rule;
}

std::vector<double> Breakpoints(double a, double b, std::vector<double> interior) {
  std::vector<double> out{a};
  std::sort(interior.begin(), interior.end());
  for (double x : interior)
    if (x > out.back() && x < b) out.push_back(x);
  out.push_back(b);
  return out;
}

void AppendMultiples(double a, double b, double step, std::vector<double>& out) {
  if (!(step > 0.0)) return;
  for (double m = std::floor(a / step) + 1.0; m * step < b; m += 1.0)
    if (m * step > a) out.push_back(m * step);
}

Result<double> Adaptive(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, 20, tol, &err);
  return {v, err * std::max(1.0, std::abs(v))};
}

Complex PolyExpIntegral(std::span<const double> coeffs, Complex z,
                        double length) {
  const std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  const double az = std::abs(z);
  if (az * length > std::max(40.0, 2.0 * static_cast<double>(degree))) {
    // sum_j [p^(j)(0) - p^(j)(L) e^{-zL}] / z^{j+1}
    std::vector<double> d(coeffs.begin(), coeffs.end());
    const Complex tail = std::exp(-z * length);
    Complex zpow = z;
    Complex sum = 0.0;
    while (!d.empty()) {
      double at_end = 0.0;
      for (std::size_t i = d.size(); i-- > 0;) at_end = at_end * length + d[i];
      sum += (d[0] - at_end * tail) / zpow;
      zpow *= z;
      for (std::size_t i = 1; i < d.size(); ++i)
        d[i - 1] = d[i] * static_cast<double>(i);
      d.pop_back();
    }
    return sum;
  }
  const double panel = std::min(length, 0.5 / std::max(1.0, std::abs(z.imag())) * 3.0);
  auto f = [&](double tau) {
    double p = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) p = p * tau + coeffs[i];
    return p * std::exp(-z * tau);
  };
  const std::vector<double> br{0.0, length};
  return IntegratePanels<Complex>(f, br, std::max(panel, length / 4096.0)).value;
}

Complex FilonSimpson(std::span<const double> values, double w0, double h,
                     Complex c) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const auto mu = Moments(c, 2.0 * h);
  const double h2 = h * h;
  const Complex a0 = (mu[2] - 3.0 * h * mu[1] + 2.0 * h2 * mu[0]) / (2.0 * h2);
  const Complex a1 = -(mu[2] - 2.0 * h * mu[1]) / h2;
  const Complex a2 = (mu[2] - h * mu[1]) / (2.0 * h2);
  std::vector<Complex> parts;
  parts.reserve(n / 2 + 1);
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const Complex base = std::exp(c * (w0 + h * static_cast<double>(i)));
    parts.push_back(base * (a0 * values[i] + a1 * values[i + 1] + a2 * values[i + 2]));
  }
  if (i + 1 < n) {
    const auto m1 = Moments(c, h);
    const Complex b1 = m1[1] / h;
    const Complex b0 = m1[0] - b1;
    const Complex base = std::exp(c * (w0 + h * static_cast<double>(i)));
    parts.push_back(base * (b0 * values[i] + b1 * values[i + 1]));
  }
  return PairwiseSum(parts);
}

}  // namespace beurling::quad

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace beurling {

double EvalPolynomial(std::span<const double> coeffs, double t);
double EvalPolynomialDerivative(std::span<const double> coeffs, double t);

// Piecewise polynomial in w = log u. Piece i lives on [knots[i], knots[i+1])
// and is stored in the shifted variable (w - knots[i]); raw-w monomials lose
// all precision near w ~ 60. Zero outside [knots.front(), knots.back()).
class LogPiecewisePolynomial {
 public:
  LogPiecewisePolynomial() = default;
  LogPiecewisePolynomial(std::vector<double> knots,
                         std::vector<std::vector<double>> pieces);

  // Right-continuous value.
  double Eval(double w) const;
  // Left limit (differs from Eval only at knots).
  double EvalLeft(double w) const;
  // d/dw; right derivative at knots.
  double Derivative(double w) const;

  // Index of the piece containing w, or npos outside the support.
  std::size_t PieceIndex(double w) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Highest index with a non-zero coefficient (-1 for the zero piece).
  int Degree(std::size_t piece) const;

  double w_min() const { return knots_.empty() ? 0.0 : knots_.front(); }
  double w_max() const { return knots_.empty() ? 0.0 : knots_.back(); }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<std::vector<double>>& pieces() const { return pieces_; }

 private:
  std::vector<double> knots_;
  std::vector<std::vector<double>> pieces_;
};

}  // namespace beurling

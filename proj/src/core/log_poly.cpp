#include "core/log_poly.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace beurling {

double EvalPolynomial(std::span<const double> coeffs, double t) {
  double p = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) p = p * t + coeffs[i];
  return p;
}

double EvalPolynomialDerivative(std::span<const double> coeffs, double t) {
  double p = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 1;)
    p = p * t + coeffs[i] * static_cast<double>(i);
  return p;
}

LogPiecewisePolynomial::LogPiecewisePolynomial(
    std::vector<double> knots, std::vector<std::vector<double>> pieces)
    : knots_(std::move(knots)), pieces_(std::move(pieces)) {
  Require(knots_.size() == pieces_.size() + 1, ErrorCode::kInvalidArgument,
          "piecewise polynomial needs one more knot than pieces");
  Require(std::is_sorted(knots_.begin(), knots_.end()), ErrorCode::kInvalidArgument,
          "knots must be increasing");
}

std::size_t LogPiecewisePolynomial::PieceIndex(double w) const {
  if (knots_.empty() || w < knots_.front() || w >= knots_.back()) return npos;
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), w);
  return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

double LogPiecewisePolynomial::Eval(double w) const {
  const std::size_t i = PieceIndex(w);
  if (i == npos) return 0.0;
  return EvalPolynomial(pieces_[i], w - knots_[i]);
}

double LogPiecewisePolynomial::EvalLeft(double w) const {
  if (knots_.empty() || w <= knots_.front() || w > knots_.back()) return 0.0;
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), w);
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  return EvalPolynomial(pieces_[i], w - knots_[i]);
}

double LogPiecewisePolynomial::Derivative(double w) const {
  const std::size_t i = PieceIndex(w);
  if (i == npos) return 0.0;
  return EvalPolynomialDerivative(pieces_[i], w - knots_[i]);
}

int LogPiecewisePolynomial::Degree(std::size_t piece) const {
  const auto& c = pieces_.at(piece);
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0.0) return static_cast<int>(i);
  return -1;
}

}  // namespace beurling

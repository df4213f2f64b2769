#pragma once

#include <string>
#include <vector>

#include "subdivmg/symbol.hpp"

namespace subdivmg {

/// Real even trigonometric polynomial f(x) = sum_{j=-d}^{d} a_j e^{ijx}, a_j = a_{-j}.
///
/// Generates circulant and Toeplitz matrices; a_0..a_d are stored.
class TrigSymbol {
 public:
  TrigSymbol() = default;
  explicit TrigSymbol(std::vector<double> half, std::string label = {});

  static TrigSymbol from_subdivision(const SubdivisionSymbol& s);
  /// 2 - 2cos x
  static TrigSymbol laplacian();
  /// (2 - 2cos x)^2
  static TrigSymbol biharmonic();

  int degree() const { return static_cast<int>(half_.size()) - 1; }
  const std::vector<double>& half() const { return half_; }
  const std::string& label() const { return label_; }
  /// a_j for any integer j.
  double coefficient(int j) const;
  double max_abs_coefficient() const;
  bool is_zero() const;

  double operator()(double x) const;
  double derivative(double x, int order) const;

  friend TrigSymbol operator*(const TrigSymbol& a, const TrigSymbol& b);
  friend TrigSymbol operator+(const TrigSymbol& a, const TrigSymbol& b);
  friend TrigSymbol operator*(const TrigSymbol& a, double s);

 private:
  void trim();

  std::vector<double> half_{0.0};
  std::string label_;
};

}  // namespace subdivmg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdivmg/structured.hpp"
#include "subdivmg/trig_symbol.hpp"

namespace subdivmg {

/// A x_exact = b, with b built from x_exact.
struct ProblemInstance {
  StructuredOperator A;
  Vector b;
  Vector x_exact;
  std::optional<TrigSymbol> symbol;
  std::string id;
  std::string description;
};

/// T_n((2 - 2cos x)^2) with x_j = j / n, j = 1..n.
ProblemInstance biharmonic_problem(Index n);

/// Clamped B-spline basis of degree mu on nu uniform intervals of [0, 1].
/// Functions and Greville points are indexed 0..nu+mu-1.
class BSplineBasis {
 public:
  BSplineBasis(int intervals, int degree);

  int intervals() const { return intervals_; }
  int degree() const { return degree_; }
  int size() const { return intervals_ + degree_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& greville() const { return greville_; }

  /// All basis functions (or a derivative of them) at x in [0, 1].
  std::vector<double> eval_all(double x, int order = 0) const;

 private:
  int intervals_;
  int degree_;
  std::vector<double> knots_;
  std::vector<double> greville_;
};

/// Value or derivative (order 0, 1 or 2) of basis function j at x.
double bspline_eval(const BSplineBasis& basis, int j, double x, int order = 0);

/// Collocation of -u'' at the interior Greville points with the interior
/// B-splines; n = nu + mu - 2. Dense, not symmetric in general.
ProblemInstance iga_laplacian_problem(int intervals, int degree);

/// Same problem addressed by its dimension n (nu = n - mu + 2).
ProblemInstance iga_laplacian_problem_for_dim(Index n, int degree);

/// (2 - 2cos x) * sum_{|a| <= a_max} sinc((x + 2 a pi) / 2)^(mu - 1), the symbol
/// of the Toeplitz part of the collocation matrix up to the factor nu^2.
double iga_symbol(int degree, double x, int a_max = 64);

}  // namespace subdivmg

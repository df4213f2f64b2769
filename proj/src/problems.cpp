#include "subdivmg/problems.hpp"

#include <cmath>
#include <numbers>

#include "subdivmg/errors.hpp"

namespace subdivmg {

ProblemInstance biharmonic_problem(Index n) {
  if (n < 1) throw BadDimension("biharmonic problem needs n >= 1");
  const TrigSymbol f = TrigSymbol::biharmonic();
  Vector x(n);
  for (Index j = 0; j < n; ++j) x[j] = static_cast<double>(j + 1) / static_cast<double>(n);
  auto A = StructuredOperator::toeplitz(f, n);
  Vector b = A.apply(x);
  return {std::move(A), std::move(b), std::move(x), f, "biharmonic",
          "fourth order finite differences, symbol (2-2cos(x))^2, n = " + std::to_string(n)};
}

BSplineBasis::BSplineBasis(int intervals, int degree) : intervals_(intervals), degree_(degree) {
  if (degree < 1) throw InvalidDegree("B-spline degree must be at least 1");
  if (intervals < 1) throw InvalidParameter("B-spline basis needs at least one interval");
  knots_.assign(static_cast<std::size_t>(degree), 0.0);
  for (int j = 0; j <= intervals; ++j) knots_.push_back(static_cast<double>(j) / intervals);
  knots_.insert(knots_.end(), static_cast<std::size_t>(degree), 1.0);
  greville_.resize(static_cast<std::size_t>(size()));
  for (int j = 0; j < size(); ++j) {
    double sum = 0.0;
    for (int k = 1; k <= degree; ++k) sum += knots_[static_cast<std::size_t>(j + k)];
    greville_[static_cast<std::size_t>(j)] = sum / degree;
  }
}

std::vector<double> BSplineBasis::eval_all(double x, int order) const {
  if (order < 0) throw InvalidParameter("derivative order must be nonnegative");
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidParameter("B-spline argument outside [0, 1]");
  const auto& t = knots_;
  const int m_knots = static_cast<int>(t.size());
  auto ratio = [](double num, double den) { return den == 0.0 ? 0.0 : num / den; };

  // degree 0; x = 1 belongs to the last nonempty span
  std::vector<double> v(static_cast<std::size_t>(m_knots - 1), 0.0);
  const int last_span = intervals_ + degree_ - 1;
  for (int i = 0; i < m_knots - 1; ++i) {
    const bool inside = x == 1.0 ? i == last_span : (t[i] <= x && x < t[i + 1]);
    if (inside) v[static_cast<std::size_t>(i)] = 1.0;
  }
  const int value_degree = degree_ - order;
  if (value_degree < 0) return std::vector<double>(static_cast<std::size_t>(size()), 0.0);

  for (int m = 1; m <= value_degree; ++m) {
    for (int i = 0; i < m_knots - 1 - m; ++i) {
      const auto u = static_cast<std::size_t>(i);
      v[u] = ratio(x - t[u], t[u + m] - t[u]) * v[u] + ratio(t[u + m + 1] - x, t[u + m + 1] - t[u + 1]) * v[u + 1];
    }
  }
  for (int m = value_degree + 1; m <= degree_; ++m) {
    for (int i = 0; i < m_knots - 1 - m; ++i) {
      const auto u = static_cast<std::size_t>(i);
      v[u] = m * (ratio(v[u], t[u + m] - t[u]) - ratio(v[u + 1], t[u + m + 1] - t[u + 1]));
    }
  }
  v.resize(static_cast<std::size_t>(size()));
  return v;
}

double bspline_eval(const BSplineBasis& basis, int j, double x, int order) {
  if (j < 0 || j >= basis.size()) {
    throw IndexOutOfRange("B-spline index " + std::to_string(j) + " outside [0, " + std::to_string(basis.size()) +
                          ")");
  }
  return basis.eval_all(x, order)[static_cast<std::size_t>(j)];
}

ProblemInstance iga_laplacian_problem(int intervals, int degree) {
  if (degree < 2) throw InvalidDegree("collocation of -u'' needs degree >= 2");
  if (intervals < 2) throw InvalidParameter("collocation needs at least two intervals");
  const BSplineBasis basis(intervals, degree);
  const Index n = intervals + degree - 2;
  if (n < 2) throw BadDimension("collocation system too small");
  Matrix A = Matrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    const auto d2 = basis.eval_all(basis.greville()[static_cast<std::size_t>(r + 1)], 2);
    for (Index c = 0; c < n; ++c) A(r, c) = -d2[static_cast<std::size_t>(c + 1)];
  }
  Vector x(n);
  const double h = std::numbers::pi / static_cast<double>(n - 1);
  for (Index j = 0; j < n; ++j) {
    x[j] = std::sin(5.0 * h * static_cast<double>(j)) + std::sin(static_cast<double>(n) * h * static_cast<double>(j));
  }
  auto op = StructuredOperator::dense(A);
  Vector b = op.apply(x);
  return {std::move(op), std::move(b), std::move(x), std::nullopt, "iga-laplacian",
          "B-spline collocation of -u'', degree " + std::to_string(degree) + ", " + std::to_string(intervals) +
              " intervals, n = " + std::to_string(n)};
}

ProblemInstance iga_laplacian_problem_for_dim(Index n, int degree) {
  if (degree < 2) throw InvalidDegree("collocation of -u'' needs degree >= 2");
  return iga_laplacian_problem(static_cast<int>(n) - degree + 2, degree);
}

double iga_symbol(int degree, double x, int a_max) {
  if (degree < 2) throw InvalidDegree("IgA symbol needs degree >= 2");
  double h = 0.0;
  for (int a = -a_max; a <= a_max; ++a) {
    const double xi = x + 2.0 * a * std::numbers::pi;
    const double term = std::abs(xi) < 1e-300 ? 1.0 : 2.0 * std::sin(xi / 2.0) / xi;
    h += std::pow(term, degree - 1);
  }
  return (2.0 - 2.0 * std::cos(x)) * h;
}

}  // namespace subdivmg

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "subdivmg/laurent_poly.hpp"

namespace subdivmg {

/// Odd-symmetric subdivision mask p with arity g.
///
/// Offsets are centered: offset 0 is the center of symmetry, so p_{-a} = p_a
/// is checked once at construction. The exact rational mask is kept alongside
/// its double image; both are immutable.
class SubdivisionSymbol {
 public:
  SubdivisionSymbol(LaurentPoly<Rational> mask, int arity, std::string label = {});

  int arity() const { return arity_; }
  /// Largest offset with a nonzero coefficient.
  int radius() const { return static_cast<int>(half_.size()) - 1; }
  const std::string& label() const { return label_; }

  const LaurentPoly<Rational>& exact() const { return mask_; }
  LaurentPoly<double> laurent() const { return mask_.cast<double>(); }

  /// p_0, p_1, ..., p_radius as doubles.
  const std::vector<double>& half() const { return half_; }
  double coefficient(int offset) const;
  /// Full mask from -radius to +radius.
  std::vector<double> mask() const;

 private:
  LaurentPoly<Rational> mask_;
  int arity_;
  std::string label_;
  std::vector<double> half_;
};

/// p(exp(-i x)) = p_0 + sum_{a>0} 2 p_a cos(a x).
double eval(const SubdivisionSymbol& s, double x);

inline constexpr int kMaxDerivativeOrder = 12;

/// Analytic x-derivative of p(exp(-i x)); throws OrderTooLarge above kMaxDerivativeOrder.
double derivative_at(const SubdivisionSymbol& s, double x, int order);

/// Binary primal pseudo-spline p_{J,L}(z) = 2 sigma^J(z) q_{J,L}(z), J >= 1, 0 <= L <= J-1.
SubdivisionSymbol binary_pseudo_spline(int J, int L);

/// Ternary primal pseudo-spline 3 sigma~^{J+1}(z) q~_{J,L}(z), J >= 1, L odd, 1 <= L <= J.
SubdivisionSymbol ternary_pseudo_spline(int J, int L);

/// p(z) = (1 + z + ... + z^{g-1})^factor_power * quotient(z), factor_power maximal.
struct FactorSplit {
  int factor_power = 0;
  LaurentPoly<double> quotient;

  /// Degree of polynomial generation implied by the factorization (factor_power - 1).
  int degree() const { return factor_power - 1; }
};

inline constexpr double kFactorDivisionTolerance = 1e-10;

FactorSplit smoothing_factor_split(const SubdivisionSymbol& s);

/// The factor 1 + z + ... + z^{g-1}.
template <typename Scalar>
LaurentPoly<Scalar> arity_factor(int g) {
  return LaurentPoly<Scalar>::from_dense(0, std::vector<Scalar>(static_cast<std::size_t>(g), Scalar(1)));
}

/// Text format:
///   arity g
///   num/den num/den ...     (leftmost to rightmost offset)
///   center index            (0-based position of offset 0 in the list)
void write_symbol(std::ostream& os, const SubdivisionSymbol& s);
SubdivisionSymbol read_symbol(std::istream& is);

}  // namespace subdivmg

#include "subdivmg/symbol.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <istream>
#include <ostream>
#include <sstream>

#include "subdivmg/cosine_series.hpp"
#include "subdivmg/errors.hpp"

namespace subdivmg {

namespace {

std::int64_t binomial(int n, int k) {
  return static_cast<std::int64_t>(std::llround(boost::math::binomial_coefficient<double>(
      static_cast<unsigned>(n), static_cast<unsigned>(k))));
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r.numerator() << '/' << r.denominator();
  return os.str();
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto num = std::stoll(token, &used);
      if (used != token.size()) throw ParseError("bad rational '" + token + "'");
      return Rational(num);
    }
    const std::string ns = token.substr(0, slash);
    const std::string ds = token.substr(slash + 1);
    const auto num = std::stoll(ns, &used);
    if (used != ns.size()) throw ParseError("bad rational '" + token + "'");
    const auto den = std::stoll(ds, &used);
    if (used != ds.size() || den == 0) throw ParseError("bad rational '" + token + "'");
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw ParseError("bad rational '" + token + "'");
  }
}

}  // namespace

SubdivisionSymbol::SubdivisionSymbol(LaurentPoly<Rational> mask, int arity, std::string label)
    : mask_(std::move(mask)), arity_(arity), label_(std::move(label)) {
  if (arity_ < 2) throw InvalidSymbol("arity must be at least 2");
  if (mask_.is_zero()) throw InvalidSymbol("mask has no nonzero coefficient");
  for (const auto& [k, c] : mask_.terms()) {
    if (mask_.coefficient(-k) != c) {
      throw InvalidSymbol("mask is not odd symmetric at offset " + std::to_string(k));
    }
  }
  half_.assign(static_cast<std::size_t>(mask_.highest() + 1), 0.0);
  for (const auto& [k, c] : mask_.terms()) {
    if (k >= 0) half_[static_cast<std::size_t>(k)] = boost::rational_cast<double>(c);
  }
}

double SubdivisionSymbol::coefficient(int offset) const {
  const auto a = static_cast<std::size_t>(std::abs(offset));
  return a < half_.size() ? half_[a] : 0.0;
}

std::vector<double> SubdivisionSymbol::mask() const {
  std::vector<double> out;
  for (int k = -radius(); k <= radius(); ++k) out.push_back(coefficient(k));
  return out;
}

double eval(const SubdivisionSymbol& s, double x) { return cosine_series<double>(s.half(), x); }

double derivative_at(const SubdivisionSymbol& s, double x, int order) {
  if (order < 0) throw InvalidParameter("derivative order must be nonnegative");
  if (order > kMaxDerivativeOrder) {
    throw OrderTooLarge("derivative order " + std::to_string(order) + " exceeds " +
                        std::to_string(kMaxDerivativeOrder));
  }
  return cosine_series_derivative<double>(s.half(), x, order);
}

SubdivisionSymbol binary_pseudo_spline(int J, int L) {
  if (J < 1 || L < 0 || L > J - 1) {
    throw InvalidOrder("binary pseudo-spline needs J >= 1 and 0 <= L <= J-1, got (" +
                       std::to_string(J) + "," + std::to_string(L) + ")");
  }
  using P = LaurentPoly<Rational>;
  // sigma(z) = (1+z)^2 / (4z), delta(z) = -(1-z)^2 / (4z)
  const P sigma = P::from_dense(-1, {Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  const P delta = P::from_dense(-1, {Rational(-1, 4), Rational(1, 2), Rational(-1, 4)});
  P q;
  for (int k = 0; k <= L; ++k) q += delta.pow(k) * Rational(binomial(J - 1 + k, k));
  P p = sigma.pow(J) * q * Rational(2);
  return SubdivisionSymbol(std::move(p), 2,
                           "binary-" + std::to_string(J) + "-" + std::to_string(L));
}

SubdivisionSymbol ternary_pseudo_spline(int J, int L) {
  if (J < 1 || L < 1 || L > J || L % 2 == 0) {
    throw InvalidOrder("ternary pseudo-spline needs J >= 1 and odd L with 1 <= L <= J, got (" +
                       std::to_string(J) + "," + std::to_string(L) + ")");
  }
  using P = LaurentPoly<Rational>;
  // sigma~(z) = (1+z+z^2) / (3z), delta~(z) = -(1-z)^2 / (3z)
  const P sigma = P::from_dense(-1, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  const P delta = P::from_dense(-1, {Rational(-1, 3), Rational(2, 3), Rational(-1, 3)});
  const int half_l = (L - 1) / 2;
  P q;
  for (int k = 0; k <= half_l; ++k) q += delta.pow(k) * Rational(binomial(J + k, k));
  P p = sigma.pow(J + 1) * q * Rational(3);
  return SubdivisionSymbol(std::move(p), 3,
                           "ternary-" + std::to_string(J) + "-" + std::to_string(L));
}

FactorSplit smoothing_factor_split(const SubdivisionSymbol& s) {
  const auto factor = arity_factor<double>(s.arity());
  FactorSplit split{0, s.laurent()};
  const double tol = kFactorDivisionTolerance * split.quotient.max_abs_coefficient();
  while (auto q = split.quotient.divide(factor, tol)) {
    split.quotient = std::move(*q);
    ++split.factor_power;
  }
  return split;
}

void write_symbol(std::ostream& os, const SubdivisionSymbol& s) {
  os << "arity " << s.arity() << '\n';
  const int r = s.radius();
  for (int k = -r; k <= r; ++k) {
    if (k > -r) os << ' ';
    os << format_rational(s.exact().coefficient(k));
  }
  os << '\n' << r << '\n';
}

SubdivisionSymbol read_symbol(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing arity line");
  std::istringstream head(line);
  std::string keyword;
  int arity = 0;
  if (!(head >> keyword >> arity) || keyword != "arity") {
    throw ParseError("first line must read 'arity g'");
  }
  if (!std::getline(is, line)) throw ParseError("missing coefficient line");
  std::istringstream coeffs(line);
  std::vector<Rational> values;
  for (std::string tok; coeffs >> tok;) values.push_back(parse_rational(tok));
  if (values.empty()) throw ParseError("empty coefficient line");
  if (!std::getline(is, line)) throw ParseError("missing center line");
  std::istringstream center_line(line);
  long center = -1;
  if (!(center_line >> center) || center < 0 || center >= static_cast<long>(values.size())) {
    throw ParseError("center index out of range");
  }
  auto mask = LaurentPoly<Rational>::from_dense(-static_cast<int>(center), values);
  try {
    return SubdivisionSymbol(std::move(mask), arity);
  } catch (const InvalidSymbol& e) {
    throw ParseError(std::string("invalid symbol: ") + e.what());
  }
}

}  // namespace subdivmg

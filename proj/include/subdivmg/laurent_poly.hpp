#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include <boost/rational.hpp>

namespace subdivmg {

using Rational = boost::rational<std::int64_t>;

namespace detail {

template <typename Scalar>
double to_double(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return boost::rational_cast<double>(v);
  } else {
    return static_cast<double>(v);
  }
}

template <typename Scalar>
double magnitude(const Scalar& v) {
  return std::abs(to_double(v));
}

}  // namespace detail

/// Finitely supported Laurent polynomial sum_k c_k z^k.
///
/// Zero coefficients are never stored, so the support is exactly the key set.
/// Scalar is either Rational (exact construction of masks) or double.
template <typename Scalar>
class LaurentPoly {
 public:
  using Terms = std::map<int, Scalar>;

  LaurentPoly() = default;

  explicit LaurentPoly(const Terms& terms) {
    for (const auto& [k, c] : terms) {
      if (c != Scalar(0)) terms_.emplace(k, c);
    }
  }

  static LaurentPoly monomial(int exponent, Scalar coefficient = Scalar(1)) {
    return LaurentPoly(Terms{{exponent, coefficient}});
  }

  static LaurentPoly constant(Scalar c) { return monomial(0, c); }

  /// Builds sum_k coeffs[k] z^(lowest + k).
  static LaurentPoly from_dense(int lowest, const std::vector<Scalar>& coeffs) {
    Terms t;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      t.emplace(lowest + static_cast<int>(k), coeffs[k]);
    }
    return LaurentPoly(t);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int lowest() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int highest() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Scalar coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Dense coefficient vector from lowest() to highest().
  std::vector<Scalar> dense() const {
    std::vector<Scalar> out;
    if (is_zero()) return out;
    out.assign(static_cast<std::size_t>(highest() - lowest() + 1), Scalar(0));
    for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k - lowest())] = c;
    return out;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, detail::magnitude(c));
    return m;
  }

  Scalar sum_of_coefficients() const {
    Scalar s(0);
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  template <typename Other>
  LaurentPoly<Other> cast() const {
    typename LaurentPoly<Other>::Terms t;
    for (const auto& [k, c] : terms_) {
      if constexpr (std::is_same_v<Other, double>) {
        t.emplace(k, detail::to_double(c));
      } else {
        t.emplace(k, static_cast<Other>(c));
      }
    }
    return LaurentPoly<Other>(t);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) {
      Scalar v = coefficient(k) + c;
      if (v == Scalar(0)) {
        terms_.erase(k);
      } else {
        terms_[k] = v;
      }
    }
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += o * Scalar(-1); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    Terms t;
    for (const auto& [i, x] : a.terms_) {
      for (const auto& [j, y] : b.terms_) t[i + j] += x * y;
    }
    return LaurentPoly(t);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const Scalar& s) {
    Terms t;
    for (const auto& [k, c] : a.terms_) t.emplace(k, c * s);
    return LaurentPoly(t);
  }
  friend LaurentPoly operator*(const Scalar& s, const LaurentPoly& a) { return a * s; }

  LaurentPoly pow(int exponent) const {
    LaurentPoly result = constant(Scalar(1));
    for (int i = 0; i < exponent; ++i) result = result * (*this);
    return result;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Exact division by a nonzero divisor.
  ///
  /// Returns the quotient when the remainder vanishes: exactly for Rational,
  /// and up to abs_tol in every remainder coefficient for double.
  std::optional<LaurentPoly> divide(const LaurentPoly& divisor, double abs_tol = 0.0) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly();
    std::vector<Scalar> rem = dense();
    const std::vector<Scalar> div = divisor.dense();
    if (rem.size() < div.size()) return std::nullopt;
    const std::size_t qlen = rem.size() - div.size() + 1;
    std::vector<Scalar> q(qlen, Scalar(0));
    const Scalar lead = div.back();
    for (std::size_t step = 0; step < qlen; ++step) {
      const std::size_t qi = qlen - 1 - step;
      const Scalar factor = rem[qi + div.size() - 1] / lead;
      q[qi] = factor;
      for (std::size_t j = 0; j < div.size(); ++j) rem[qi + j] -= factor * div[j];
    }
    for (const Scalar& r : rem) {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        if (r != Scalar(0)) return std::nullopt;
      } else {
        if (detail::magnitude(r) > abs_tol) return std::nullopt;
      }
    }
    return from_dense(lowest() - divisor.lowest(), q);
  }

 private:
  Terms terms_;
};

}  // namespace subdivmg

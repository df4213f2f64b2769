#pragma once

#include <cmath>
#include <span>

namespace subdivmg {

/// m-th derivative of c_0 + 2 sum_{k>=1} c_k cos(k x), differentiated term by term.
///
/// This is the real form of an odd-symmetric Laurent polynomial evaluated at
/// z = exp(-i x); `half` holds c_0, c_1, ..., c_d.
template <typename Scalar = double>
Scalar cosine_series_derivative(std::span<const double> half, Scalar x, int order) {
  Scalar sum(0);
  if (half.empty()) return sum;
  if (order == 0) sum += Scalar(half[0]);
  for (std::size_t k = 1; k < half.size(); ++k) {
    if (half[k] == 0.0) continue;
    const Scalar kx = Scalar(static_cast<double>(k)) * x;
    Scalar scale(2.0 * half[k]);
    for (int i = 0; i < order; ++i) scale *= Scalar(static_cast<double>(k));
    Scalar term;
    switch (order % 4) {
      case 0: term = std::cos(kx); break;
      case 1: term = -std::sin(kx); break;
      case 2: term = -std::cos(kx); break;
      default: term = std::sin(kx); break;
    }
    sum += scale * term;
  }
  return sum;
}

template <typename Scalar = double>
Scalar cosine_series(std::span<const double> half, Scalar x) {
  return cosine_series_derivative<Scalar>(half, x, 0);
}

}  // namespace subdivmg

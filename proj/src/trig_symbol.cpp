#include "subdivmg/trig_symbol.hpp"

#include <algorithm>
#include <cmath>

#include "subdivmg/cosine_series.hpp"

namespace subdivmg {

TrigSymbol::TrigSymbol(std::vector<double> half, std::string label)
    : half_(std::move(half)), label_(std::move(label)) {
  if (half_.empty()) half_.push_back(0.0);
  trim();
}

void TrigSymbol::trim() {
  while (half_.size() > 1 && half_.back() == 0.0) half_.pop_back();
}

TrigSymbol TrigSymbol::from_subdivision(const SubdivisionSymbol& s) {
  return TrigSymbol(s.half(), s.label());
}

TrigSymbol TrigSymbol::laplacian() { return TrigSymbol({2.0, -1.0}, "2-2cos(x)"); }

TrigSymbol TrigSymbol::biharmonic() { return TrigSymbol({6.0, -4.0, 1.0}, "(2-2cos(x))^2"); }

double TrigSymbol::coefficient(int j) const {
  const auto a = static_cast<std::size_t>(std::abs(j));
  return a < half_.size() ? half_[a] : 0.0;
}

double TrigSymbol::max_abs_coefficient() const {
  double m = 0.0;
  for (double a : half_) m = std::max(m, std::abs(a));
  return m;
}

bool TrigSymbol::is_zero() const {
  return std::all_of(half_.begin(), half_.end(), [](double a) { return a == 0.0; });
}

double TrigSymbol::operator()(double x) const { return cosine_series<double>(half_, x); }

double TrigSymbol::derivative(double x, int order) const {
  return cosine_series_derivative<double>(half_, x, order);
}

TrigSymbol operator*(const TrigSymbol& a, const TrigSymbol& b) {
  const int da = a.degree();
  const int db = b.degree();
  std::vector<double> out(static_cast<std::size_t>(da + db + 1), 0.0);
  for (int i = -da; i <= da; ++i) {
    for (int j = -db; j <= db; ++j) {
      const int k = i + j;
      if (k >= 0) out[static_cast<std::size_t>(k)] += a.coefficient(i) * b.coefficient(j);
    }
  }
  return TrigSymbol(std::move(out));
}

TrigSymbol operator+(const TrigSymbol& a, const TrigSymbol& b) {
  std::vector<double> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
  }
  return TrigSymbol(std::move(out));
}

TrigSymbol operator*(const TrigSymbol& a, double s) {
  std::vector<double> out = a.half();
  for (double& v : out) v *= s;
  return TrigSymbol(std::move(out), a.label());
}

}  // namespace subdivmg

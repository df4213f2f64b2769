#include "subdivmg/structured.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "subdivmg/analysis.hpp"
#include "subdivmg/errors.hpp"

namespace subdivmg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Index wrap_index(Index k, Index n) {
  Index r = k % n;
  return r < 0 ? r + n : r;
}

// c_k = sum_{j = k mod n} a_j
std::vector<double> fold_symbol(const TrigSymbol& f, Index n) {
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (int j = -f.degree(); j <= f.degree(); ++j) {
    c[static_cast<std::size_t>(wrap_index(j, n))] += f.coefficient(j);
  }
  return c;
}

Index detect_bandwidth(const RowMatrix& m) {
  Index band = 0;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index s = 0; s < m.cols(); ++s) {
      if (m(r, s) != 0.0) band = std::max(band, std::abs(r - s));
    }
  }
  return band;
}

}  // namespace

StructuredOperator StructuredOperator::circulant(const TrigSymbol& f, Index n) {
  if (n < 1) throw BadDimension("circulant dimension must be positive");
  Circulant c{f, n, fold_symbol(f, n), Vector(n)};
  for (Index r = 0; r < n; ++r) {
    c.eigenvalues[r] = f(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
  }
  return StructuredOperator(std::move(c));
}

StructuredOperator StructuredOperator::toeplitz(const TrigSymbol& f, Index n) {
  if (n < 1) throw BadDimension("Toeplitz dimension must be positive");
  return StructuredOperator(ToeplitzBanded{f, n});
}

StructuredOperator StructuredOperator::dense(const Eigen::Ref<const Matrix>& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw BadDimension("dense operator must be square");
  RowMatrix rm = m;
  const Index band = detect_bandwidth(rm);
  return StructuredOperator(Dense{std::move(rm), band});
}

OperatorKind StructuredOperator::kind() const {
  return std::visit(Overloaded{[](const Circulant&) { return OperatorKind::Circulant; },
                               [](const ToeplitzBanded&) { return OperatorKind::ToeplitzBanded; },
                               [](const Dense&) { return OperatorKind::Dense; }},
                    storage_);
}

Index StructuredOperator::dim() const {
  return std::visit(Overloaded{[](const Circulant& c) { return c.n; },
                               [](const ToeplitzBanded& t) { return t.n; },
                               [](const Dense& d) { return d.matrix.rows(); }},
                    storage_);
}

const TrigSymbol* StructuredOperator::symbol() const {
  return std::visit(Overloaded{[](const Circulant& c) -> const TrigSymbol* { return &c.symbol; },
                               [](const ToeplitzBanded& t) -> const TrigSymbol* { return &t.symbol; },
                               [](const Dense&) -> const TrigSymbol* { return nullptr; }},
                    storage_);
}

Vector StructuredOperator::apply(const Eigen::Ref<const Vector>& v) const {
  return std::visit(
      Overloaded{
          [&](const Circulant& c) -> Vector {
            if (c.n == 1) return c.eigenvalues[0] * v;
            Eigen::FFT<double> fft;
            const Eigen::VectorXcd in = v.cast<std::complex<double>>();
            Eigen::VectorXcd spectrum;
            fft.fwd(spectrum, in);
            spectrum.array() *= c.eigenvalues.array().cast<std::complex<double>>();
            Eigen::VectorXcd out;
            fft.inv(out, spectrum);
            return out.real();
          },
          [&](const ToeplitzBanded& t) -> Vector {
            const Index d = t.symbol.degree();
            Vector y = Vector::Zero(t.n);
            for (Index r = 0; r < t.n; ++r) {
              const Index lo = std::max<Index>(0, r - d);
              const Index hi = std::min<Index>(t.n - 1, r + d);
              double acc = 0.0;
              for (Index s = lo; s <= hi; ++s) acc += t.symbol.coefficient(static_cast<int>(r - s)) * v[s];
              y[r] = acc;
            }
            return y;
          },
          [&](const Dense& m) -> Vector {
            const Index n = m.matrix.rows();
            Vector y(n);
            for (Index r = 0; r < n; ++r) {
              const Index lo = std::max<Index>(0, r - m.bandwidth);
              const Index len = std::min<Index>(n - 1, r + m.bandwidth) - lo + 1;
              y[r] = m.matrix.row(r).segment(lo, len).dot(v.segment(lo, len));
            }
            return y;
          }},
      storage_);
}

double StructuredOperator::entry(Index r, Index s) const {
  return std::visit(
      Overloaded{[&](const Circulant& c) {
                   return c.first_column[static_cast<std::size_t>(wrap_index(r - s, c.n))];
                 },
                 [&](const ToeplitzBanded& t) { return t.symbol.coefficient(static_cast<int>(r - s)); },
                 [&](const Dense& m) { return m.matrix(r, s); }},
      storage_);
}

Vector StructuredOperator::diagonal() const {
  const Index n = dim();
  Vector d(n);
  for (Index i = 0; i < n; ++i) d[i] = entry(i, i);
  return d;
}

Matrix StructuredOperator::to_dense() const {
  if (const auto* m = std::get_if<Dense>(&storage_)) return m->matrix;
  const Index n = dim();
  Matrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) out(r, s) = entry(r, s);
  }
  return out;
}

SparseMatrix StructuredOperator::to_sparse() const {
  const Index n = dim();
  std::vector<Eigen::Triplet<double>> triplets;
  std::visit(Overloaded{[&](const Circulant& c) {
                          for (Index r = 0; r < n; ++r) {
                            for (Index k = 0; k < n; ++k) {
                              const double v = c.first_column[static_cast<std::size_t>(k)];
                              if (v != 0.0) triplets.emplace_back(r, wrap_index(r - k, n), v);
                            }
                          }
                        },
                        [&](const ToeplitzBanded& t) {
                          const Index d = t.symbol.degree();
                          for (Index r = 0; r < n; ++r) {
                            for (Index s = std::max<Index>(0, r - d); s <= std::min<Index>(n - 1, r + d); ++s) {
                              const double v = t.symbol.coefficient(static_cast<int>(r - s));
                              if (v != 0.0) triplets.emplace_back(r, s, v);
                            }
                          }
                        },
                        [&](const Dense& m) {
                          for (Index r = 0; r < n; ++r) {
                            for (Index s = std::max<Index>(0, r - m.bandwidth);
                                 s <= std::min<Index>(n - 1, r + m.bandwidth); ++s) {
                              if (m.matrix(r, s) != 0.0) triplets.emplace_back(r, s, m.matrix(r, s));
                            }
                          }
                        }},
             storage_);
  SparseMatrix out(n, n);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

bool StructuredOperator::is_symmetric(double tol) const {
  if (kind() != OperatorKind::Dense) return true;
  const auto& m = std::get<Dense>(storage_).matrix;
  const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

void StructuredOperator::gauss_seidel_sweep(Eigen::Ref<Vector> x, const Eigen::Ref<const Vector>& b) const {
  const Index n = dim();
  if (x.size() != n || b.size() != n) throw DimensionMismatch("Gauss-Seidel: size mismatch");
  std::visit(
      Overloaded{
          [&](const Circulant& c) {
            std::vector<std::pair<Index, double>> taps;
            for (Index k = 1; k < n; ++k) {
              const double v = c.first_column[static_cast<std::size_t>(k)];
              if (v != 0.0) taps.emplace_back(k, v);
            }
            const double diag = c.first_column[0];
            if (diag == 0.0) throw ZeroDiagonal("Gauss-Seidel: zero diagonal");
            for (Index r = 0; r < n; ++r) {
              double acc = b[r];
              for (const auto& [k, v] : taps) acc -= v * x[wrap_index(r - k, n)];
              x[r] = acc / diag;
            }
          },
          [&](const ToeplitzBanded& t) {
            const Index d = t.symbol.degree();
            const double diag = t.symbol.coefficient(0);
            if (diag == 0.0) throw ZeroDiagonal("Gauss-Seidel: zero diagonal");
            for (Index r = 0; r < n; ++r) {
              double acc = b[r];
              for (Index s = std::max<Index>(0, r - d); s <= std::min<Index>(n - 1, r + d); ++s) {
                if (s != r) acc -= t.symbol.coefficient(static_cast<int>(r - s)) * x[s];
              }
              x[r] = acc / diag;
            }
          },
          [&](const Dense& m) {
            for (Index r = 0; r < n; ++r) {
              const double diag = m.matrix(r, r);
              if (diag == 0.0) throw ZeroDiagonal("Gauss-Seidel: zero diagonal in row " + std::to_string(r));
              double acc = b[r];
              for (Index s = std::max<Index>(0, r - m.bandwidth); s <= std::min<Index>(n - 1, r + m.bandwidth);
                   ++s) {
                if (s != r) acc -= m.matrix(r, s) * x[s];
              }
              x[r] = acc / diag;
            }
          }},
      storage_);
}

Vector matvec(const StructuredOperator& A, const Eigen::Ref<const Vector>& v) {
  if (v.size() != A.dim()) {
    throw DimensionMismatch("matvec: operator has dimension " + std::to_string(A.dim()) +
                            ", vector has " + std::to_string(v.size()));
  }
  return A.apply(v);
}

Index coarse_dimension(Index fine_dim, int g, TransferVariant variant) {
  if (g < 2) throw BadDimension("cutting size must be at least 2");
  if (variant == TransferVariant::CirculantCut) {
    if (fine_dim < g || fine_dim % g != 0) {
      throw BadDimension("circulant cut needs g | n (n = " + std::to_string(fine_dim) + ", g = " +
                         std::to_string(g) + ")");
    }
    return fine_dim / g;
  }
  if (fine_dim < 2 * g - 1 || (fine_dim + 1) % g != 0) {
    throw BadDimension("Dirichlet cut needs g | n+1 and n >= 2g-1 (n = " + std::to_string(fine_dim) +
                       ", g = " + std::to_string(g) + ")");
  }
  return (fine_dim + 1) / g - 1;
}

Vector downsample(const Eigen::Ref<const Vector>& v, int g, TransferVariant variant) {
  const Index coarse = coarse_dimension(v.size(), g, variant);
  const Index offset = variant == TransferVariant::CirculantCut ? 0 : g - 1;
  Vector out(coarse);
  for (Index i = 0; i < coarse; ++i) out[i] = v[offset + g * i];
  return out;
}

Vector upsample(const Eigen::Ref<const Vector>& v, int g, TransferVariant variant, Index target_dim) {
  if (coarse_dimension(target_dim, g, variant) != v.size()) {
    throw BadDimension("upsample: coarse length " + std::to_string(v.size()) + " does not match target " +
                       std::to_string(target_dim));
  }
  const Index offset = variant == TransferVariant::CirculantCut ? 0 : g - 1;
  Vector out = Vector::Zero(target_dim);
  for (Index i = 0; i < v.size(); ++i) out[offset + g * i] = v[i];
  return out;
}

GridTransfer::GridTransfer(SubdivisionSymbol symbol, TransferVariant variant, Index fine_dim)
    : symbol_(std::move(symbol)),
      variant_(variant),
      fine_dim_(fine_dim),
      coarse_dim_(coarse_dimension(fine_dim, symbol_.arity(), variant)) {}

Vector GridTransfer::convolve(const Eigen::Ref<const Vector>& v) const {
  const Index n = fine_dim_;
  const int r = symbol_.radius();
  Vector out = Vector::Zero(n);
  if (variant_ == TransferVariant::CirculantCut) {
    std::vector<double> folded(static_cast<std::size_t>(n), 0.0);
    for (int k = -r; k <= r; ++k) folded[static_cast<std::size_t>(wrap_index(k, n))] += symbol_.coefficient(k);
    std::vector<std::pair<Index, double>> taps;
    for (Index k = 0; k < n; ++k) {
      if (folded[static_cast<std::size_t>(k)] != 0.0) taps.emplace_back(k, folded[static_cast<std::size_t>(k)]);
    }
    for (Index s = 0; s < n; ++s) {
      if (v[s] == 0.0) continue;
      for (const auto& [k, a] : taps) out[wrap_index(s + k, n)] += a * v[s];
    }
  } else {
    for (Index s = 0; s < n; ++s) {
      if (v[s] == 0.0) continue;
      for (Index t = std::max<Index>(0, s - r); t <= std::min<Index>(n - 1, s + r); ++t) {
        out[t] += symbol_.coefficient(static_cast<int>(t - s)) * v[s];
      }
    }
  }
  return out;
}

Vector GridTransfer::prolong(const Eigen::Ref<const Vector>& coarse) const {
  if (coarse.size() != coarse_dim_) throw DimensionMismatch("prolong: wrong coarse length");
  return convolve(upsample(coarse, arity(), variant_, fine_dim_));
}

Vector GridTransfer::restrict(const Eigen::Ref<const Vector>& fine) const {
  if (fine.size() != fine_dim_) throw DimensionMismatch("restrict: wrong fine length");
  return downsample(convolve(fine), arity(), variant_);
}

SparseMatrix GridTransfer::to_sparse() const {
  std::vector<Eigen::Triplet<double>> triplets;
  for (Index c = 0; c < coarse_dim_; ++c) {
    Vector unit = Vector::Zero(coarse_dim_);
    unit[c] = 1.0;
    const Vector col = prolong(unit);
    for (Index r = 0; r < fine_dim_; ++r) {
      if (col[r] != 0.0) triplets.emplace_back(r, c, col[r]);
    }
  }
  SparseMatrix out(fine_dim_, coarse_dim_);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

Matrix GridTransfer::to_dense() const { return Matrix(to_sparse()); }

StructuredOperator galerkin_coarsen(const StructuredOperator& A, const GridTransfer& P) {
  if (A.dim() != P.fine_dim()) {
    throw DimensionMismatch("galerkin_coarsen: operator dimension " + std::to_string(A.dim()) +
                            " differs from transfer fine dimension " + std::to_string(P.fine_dim()));
  }
  if (A.kind() == OperatorKind::Circulant && P.variant() == TransferVariant::CirculantCut) {
    return StructuredOperator::circulant(coarse_symbol(*A.symbol(), P.symbol()), P.coarse_dim());
  }
  const SparseMatrix p = P.to_sparse();
  const SparseMatrix ap = A.to_sparse() * p;
  const SparseMatrix coarse = SparseMatrix(p.transpose()) * ap;
  return StructuredOperator::dense(Matrix(coarse));
}

double packaging_check(Index n, int g) {
  const Index coarse = coarse_dimension(n, g, TransferVariant::CirculantCut);
  using Complex = std::complex<double>;
  auto fourier = [](Index m) {
    Eigen::MatrixXcd F(m, m);
    for (Index r = 0; r < m; ++r) {
      for (Index s = 0; s < m; ++s) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(r * s % m) / static_cast<double>(m);
        F(r, s) = std::polar(1.0 / std::sqrt(static_cast<double>(m)), angle);
      }
    }
    return F;
  };
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(coarse, n);
  for (Index i = 0; i < coarse; ++i) K(i, g * i) = Complex(1.0, 0.0);
  const Eigen::MatrixXcd lhs = K * fourier(n);
  const Eigen::MatrixXcd Fc = fourier(coarse);
  Eigen::MatrixXcd rhs(coarse, n);
  for (int block = 0; block < g; ++block) rhs.middleCols(block * coarse, coarse) = Fc / std::sqrt(static_cast<double>(g));
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace subdivmg

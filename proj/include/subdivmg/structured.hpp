#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "subdivmg/symbol.hpp"
#include "subdivmg/trig_symbol.hpp"

namespace subdivmg {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// C_n(f): entries c_{(r-s) mod n} where c folds a_j over j mod n.
struct Circulant {
  TrigSymbol symbol;
  Index n = 0;
  std::vector<double> first_column;  // c_0..c_{n-1}
  Vector eigenvalues;                // f(2 pi r / n)
};

/// T_n(f): entries a_{r-s}, zero outside the band |r-s| <= deg f.
struct ToeplitzBanded {
  TrigSymbol symbol;
  Index n = 0;
};

/// Explicit matrix; loops are restricted to the detected bandwidth.
struct Dense {
  RowMatrix matrix;
  Index bandwidth = 0;
};

enum class OperatorKind { Circulant, ToeplitzBanded, Dense };

/// Square operator with a uniform matvec / Gauss-Seidel / materialization contract.
class StructuredOperator {
 public:
  static StructuredOperator circulant(const TrigSymbol& f, Index n);
  static StructuredOperator toeplitz(const TrigSymbol& f, Index n);
  static StructuredOperator dense(const Eigen::Ref<const Matrix>& m);

  OperatorKind kind() const;
  Index dim() const;
  /// Symbol of a circulant or Toeplitz operator, nullptr for dense.
  const TrigSymbol* symbol() const;
  const std::variant<Circulant, ToeplitzBanded, Dense>& storage() const { return storage_; }

  Vector apply(const Eigen::Ref<const Vector>& v) const;
  double entry(Index r, Index s) const;
  Vector diagonal() const;
  Matrix to_dense() const;
  SparseMatrix to_sparse() const;
  bool is_symmetric(double tol = 1e-12) const;

  /// One forward lexicographic Gauss-Seidel sweep in place; diagonal must be nonzero.
  void gauss_seidel_sweep(Eigen::Ref<Vector> x, const Eigen::Ref<const Vector>& b) const;

 private:
  explicit StructuredOperator(std::variant<Circulant, ToeplitzBanded, Dense> s)
      : storage_(std::move(s)) {}

  std::variant<Circulant, ToeplitzBanded, Dense> storage_;
};

/// Throws DimensionMismatch when sizes differ.
Vector matvec(const StructuredOperator& A, const Eigen::Ref<const Vector>& v);

/// CirculantCut: n_{j+1} = n_j / g, keeps indices 0, g, 2g, ...
/// DirichletCut: n_{j+1} = (n_j + 1) / g - 1, keeps indices g-1, 2g-1, ...
enum class TransferVariant { CirculantCut, DirichletCut };

/// Coarse dimension for a cut, or BadDimension when the fine size does not fit.
Index coarse_dimension(Index fine_dim, int g, TransferVariant variant);

Vector downsample(const Eigen::Ref<const Vector>& v, int g, TransferVariant variant);
/// Adjoint of downsample into a vector of length target_dim.
Vector upsample(const Eigen::Ref<const Vector>& v, int g, TransferVariant variant, Index target_dim);

/// P = C_n(p) K^T (CirculantCut) or T_n(p) Zbar^T (DirichletCut).
class GridTransfer {
 public:
  GridTransfer(SubdivisionSymbol symbol, TransferVariant variant, Index fine_dim);

  const SubdivisionSymbol& symbol() const { return symbol_; }
  TransferVariant variant() const { return variant_; }
  int arity() const { return symbol_.arity(); }
  Index fine_dim() const { return fine_dim_; }
  Index coarse_dim() const { return coarse_dim_; }

  /// One subdivision step: upsample, then convolve with the mask.
  Vector prolong(const Eigen::Ref<const Vector>& coarse) const;
  /// Adjoint of prolong: convolve with the (symmetric) mask, then downsample.
  Vector restrict(const Eigen::Ref<const Vector>& fine) const;

  Matrix to_dense() const;
  SparseMatrix to_sparse() const;

 private:
  Vector convolve(const Eigen::Ref<const Vector>& v) const;

  SubdivisionSymbol symbol_;
  TransferVariant variant_;
  Index fine_dim_;
  Index coarse_dim_;
};

/// P^H A P. A circulant operator with a circulant cut stays circulant with the
/// coarse symbol; everything else is materialized.
StructuredOperator galerkin_coarsen(const StructuredOperator& A, const GridTransfer& P);

/// Max entrywise deviation of K_{n,g} F_n from (1/sqrt g)[F_{n/g} | ... | F_{n/g}].
double packaging_check(Index n, int g);

}  // namespace subdivmg

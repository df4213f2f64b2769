#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subdivmg/structured.hpp"

namespace subdivmg {

enum class SmootherKind { GaussSeidel, WeightedJacobi, Richardson };

/// omega is ignored by Gauss-Seidel. sweeps = 0 skips the smoother.
struct SmootherConfig {
  SmootherKind kind = SmootherKind::GaussSeidel;
  double omega = 1.0;
  int sweeps = 1;
};

/// Applies cfg.sweeps steps of the stationary iteration in place.
void smooth(const StructuredOperator& A, Eigen::Ref<Vector> x, const Eigen::Ref<const Vector>& b,
            const SmootherConfig& cfg);

/// Exact solver for the coarsest level. Cholesky for symmetric matrices, LU
/// otherwise, least squares (with a warning) when the matrix is singular.
class CoarseSolver {
 public:
  explicit CoarseSolver(const StructuredOperator& A);
  Vector solve(const Eigen::Ref<const Vector>& b) const;
  const std::string& warning() const { return warning_; }
  Index dim() const { return dim_; }

 private:
  enum class Method { Cholesky, LU, LeastSquares };
  Method method_;
  Index dim_;
  Eigen::LLT<Matrix> llt_;
  Eigen::PartialPivLU<Matrix> lu_;
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod_;
  std::string warning_;
};

struct MgLevel {
  StructuredOperator A;
  std::optional<GridTransfer> P;  // absent on the coarsest level
};

struct MgHierarchy {
  std::vector<MgLevel> levels;
  int arity = 2;
  Index coarsest_dim = 0;
  int cycles = 1;  // 1 = V-cycle, 2 = W-cycle
  std::shared_ptr<const CoarseSolver> coarse;

  std::vector<Index> dims() const;
};

/// Galerkin hierarchy down to the first level with dim <= coarsest_dim.
MgHierarchy build_hierarchy(const StructuredOperator& A0, const SubdivisionSymbol& p, TransferVariant variant,
                            Index coarsest_dim, int cycles = 1);

/// Two-level hierarchy: A, P and the exactly solved Galerkin coarse operator.
MgHierarchy two_grid_hierarchy(const StructuredOperator& A, const GridTransfer& P);

struct SolveReport {
  int iterations = 0;
  std::vector<double> residual_history;  // relative 2-norms, entry 0 is 1
  double conv_rate = 0.0;
  bool converged = false;
  double wall_time = 0.0;  // seconds
  std::string warning;
  Vector solution;
};

struct SolveOptions {
  SmootherConfig pre{};
  SmootherConfig post{};
  double tol = 1e-7;
  int max_iter = 1000;
  /// Called after every outer iteration with the iteration index and iterate.
  std::function<void(int, const Vector&)> observer;
};

SolveReport mgm_solve(const MgHierarchy& h, const Eigen::Ref<const Vector>& b, const SolveOptions& opts = {});

SolveReport tgm_solve(const StructuredOperator& A, const Eigen::Ref<const Vector>& b, const GridTransfer& P,
                      const SolveOptions& opts = {});

/// (h_last / h_first)^(1 / (size - 1)); needs at least two entries.
double conv_rate(const std::vector<double>& history);

std::string csv_header();
std::string csv_row(const std::string& problem, const std::string& symbol, Index n, int g,
                    const SolveReport& report);

}  // namespace subdivmg

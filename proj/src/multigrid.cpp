#include "subdivmg/multigrid.hpp"

#include <chrono>
#include <cmath>
#include <fmt/format.h>

#include "subdivmg/errors.hpp"

namespace subdivmg {

void smooth(const StructuredOperator& A, Eigen::Ref<Vector> x, const Eigen::Ref<const Vector>& b,
            const SmootherConfig& cfg) {
  if (cfg.sweeps < 0) throw InvalidParameter("smoother sweeps must be nonnegative");
  if (cfg.kind != SmootherKind::GaussSeidel && !(cfg.omega > 0.0)) {
    throw InvalidParameter("smoother weight must be positive");
  }
  if (cfg.sweeps == 0) return;
  if (x.size() != A.dim() || b.size() != A.dim()) throw DimensionMismatch("smooth: size mismatch");
  switch (cfg.kind) {
    case SmootherKind::GaussSeidel:
      for (int k = 0; k < cfg.sweeps; ++k) A.gauss_seidel_sweep(x, b);
      break;
    case SmootherKind::WeightedJacobi: {
      const Vector d = A.diagonal();
      if ((d.array() == 0.0).any()) throw ZeroDiagonal("Jacobi: zero diagonal");
      for (int k = 0; k < cfg.sweeps; ++k) x += cfg.omega * ((b - A.apply(x)).array() / d.array()).matrix();
      break;
    }
    case SmootherKind::Richardson:
      for (int k = 0; k < cfg.sweeps; ++k) x += cfg.omega * (b - A.apply(x));
      break;
  }
}

CoarseSolver::CoarseSolver(const StructuredOperator& A) : method_(Method::Cholesky), dim_(A.dim()) {
  const Matrix m = A.to_dense();
  const double scale = m.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw SingularCoarseMatrix("coarse matrix is zero");
  if (A.is_symmetric(1e-12)) {
    llt_.compute(m);
    if (llt_.info() == Eigen::Success) {
      const auto d = llt_.matrixLLT().diagonal().cwiseAbs2();
      if (d.minCoeff() > 1e-14 * scale) return;
    }
  } else {
    method_ = Method::LU;
    lu_.compute(m);
    if (std::abs(lu_.determinant()) > 0.0 && lu_.rcond() > 1e-14) return;
  }
  method_ = Method::LeastSquares;
  cod_.compute(m);
  if (cod_.rank() == 0) throw SingularCoarseMatrix("coarse matrix has rank 0");
  warning_ = fmt::format("coarse matrix ({}x{}) is singular or indefinite, rank {}; using least squares", dim_,
                         dim_, cod_.rank());
}

Vector CoarseSolver::solve(const Eigen::Ref<const Vector>& b) const {
  switch (method_) {
    case Method::Cholesky:
      return llt_.solve(b);
    case Method::LU:
      return lu_.solve(b);
    case Method::LeastSquares:
      break;
  }
  return cod_.solve(b);
}

std::vector<Index> MgHierarchy::dims() const {
  std::vector<Index> out;
  for (const auto& level : levels) out.push_back(level.A.dim());
  return out;
}

MgHierarchy build_hierarchy(const StructuredOperator& A0, const SubdivisionSymbol& p, TransferVariant variant,
                            Index coarsest_dim, int cycles) {
  if (cycles < 1) throw InvalidParameter("recursion count s must be at least 1");
  if (coarsest_dim < 1) throw InvalidParameter("coarsest dimension must be positive");
  MgHierarchy h;
  h.arity = p.arity();
  h.coarsest_dim = coarsest_dim;
  h.cycles = cycles;
  h.levels.push_back({A0, std::nullopt});
  while (h.levels.back().A.dim() > coarsest_dim) {
    const Index n = h.levels.back().A.dim();
    std::optional<GridTransfer> P;
    try {
      P.emplace(p, variant, n);
    } catch (const BadDimension& e) {
      throw IncompatibleDimension("cannot coarsen dimension " + std::to_string(n) + " with g = " +
                                  std::to_string(p.arity()) + ": " + e.what());
    }
    StructuredOperator coarse = galerkin_coarsen(h.levels.back().A, *P);
    h.levels.back().P = std::move(P);
    h.levels.push_back({std::move(coarse), std::nullopt});
  }
  h.coarse = std::make_shared<CoarseSolver>(h.levels.back().A);
  return h;
}

MgHierarchy two_grid_hierarchy(const StructuredOperator& A, const GridTransfer& P) {
  if (A.dim() != P.fine_dim()) throw DimensionMismatch("two-grid: operator and transfer sizes differ");
  MgHierarchy h;
  h.arity = P.arity();
  h.coarsest_dim = P.coarse_dim();
  h.levels.push_back({A, P});
  h.levels.push_back({galerkin_coarsen(A, P), std::nullopt});
  h.coarse = std::make_shared<CoarseSolver>(h.levels.back().A);
  return h;
}

namespace {

void cycle(const MgHierarchy& h, std::size_t j, Eigen::Ref<Vector> x, const Vector& b, const SolveOptions& opts) {
  const MgLevel& level = h.levels[j];
  if (j + 1 == h.levels.size()) {
    x = h.coarse->solve(b);
    return;
  }
  smooth(level.A, x, b, opts.pre);
  const Vector r = b - level.A.apply(x);
  const Vector rc = level.P->restrict(r);
  Vector e = Vector::Zero(rc.size());
  for (int k = 0; k < h.cycles; ++k) cycle(h, j + 1, e, rc, opts);
  x += level.P->prolong(e);
  smooth(level.A, x, b, opts.post);
}

}  // namespace

SolveReport mgm_solve(const MgHierarchy& h, const Eigen::Ref<const Vector>& b, const SolveOptions& opts) {
  if (h.levels.empty() || !h.coarse) throw InvalidParameter("empty hierarchy");
  const StructuredOperator& A = h.levels.front().A;
  if (b.size() != A.dim()) throw DimensionMismatch("mgm_solve: right-hand side has wrong length");
  if (!(opts.tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  const auto start = std::chrono::steady_clock::now();

  SolveReport report;
  report.warning = h.coarse->warning();
  report.solution = Vector::Zero(A.dim());
  const Vector b0 = b;
  const double r0 = b0.norm();
  report.residual_history.push_back(1.0);
  if (r0 == 0.0) {
    report.converged = true;
  } else {
    for (int k = 1; k <= opts.max_iter; ++k) {
      cycle(h, 0, report.solution, b0, opts);
      const double rel = (b0 - A.apply(report.solution)).norm() / r0;
      report.iterations = k;
      report.residual_history.push_back(rel);
      if (opts.observer) opts.observer(k, report.solution);
      if (!std::isfinite(rel) || rel > 1e12) break;
      if (rel < opts.tol) {
        report.converged = true;
        break;
      }
    }
    if (report.iterations >= 1) report.conv_rate = conv_rate(report.residual_history);
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SolveReport tgm_solve(const StructuredOperator& A, const Eigen::Ref<const Vector>& b, const GridTransfer& P,
                      const SolveOptions& opts) {
  return mgm_solve(two_grid_hierarchy(A, P), b, opts);
}

double conv_rate(const std::vector<double>& history) {
  if (history.size() < 2) throw TooFewIterations("convergence rate needs at least two residuals");
  const double ratio = history.back() / history.front();
  return std::pow(ratio, 1.0 / static_cast<double>(history.size() - 1));
}

std::string csv_header() { return "problem,symbol,n,g,iterations,conv_rate,converged,wall_time_s"; }

std::string csv_row(const std::string& problem, const std::string& symbol, Index n, int g,
                    const SolveReport& report) {
  return fmt::format("{},{},{},{},{},{:.4f},{},{:.6f}", problem, symbol, n, g, report.iterations,
                     report.conv_rate, report.converged ? "true" : "false", report.wall_time);
}

}  // namespace subdivmg

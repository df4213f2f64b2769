#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "subdivmg/analysis.hpp"
#include "subdivmg/errors.hpp"
#include "subdivmg/structured.hpp"

using namespace subdivmg;

namespace {

Vector random_vector(Index n, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = u(rng);
  return v;
}

std::vector<SubdivisionSymbol> all_symbols() {
  return {binary_pseudo_spline(1, 0),  binary_pseudo_spline(2, 0),  binary_pseudo_spline(2, 1),
          binary_pseudo_spline(3, 0),  binary_pseudo_spline(3, 1),  binary_pseudo_spline(3, 2),
          ternary_pseudo_spline(1, 1), ternary_pseudo_spline(2, 1), ternary_pseudo_spline(3, 1),
          ternary_pseudo_spline(3, 3), ternary_pseudo_spline(5, 3), ternary_pseudo_spline(5, 5)};
}

}  // namespace

TEST_CASE("circulant matvec agrees with the explicit matrix") {
  std::mt19937 rng(7);
  const auto f = TrigSymbol::biharmonic() * TrigSymbol::laplacian();
  oracle::Poly st;
  for (int j = -f.degree(); j <= f.degree(); ++j) st.push_back(f.coefficient(j));
  for (Index n : {1, 2, 3, 5, 8, 9, 27, 31, 64}) {
    const auto C = StructuredOperator::circulant(f, n);
    const Eigen::MatrixXd ref = oracle::circulant(st, static_cast<int>(n));
    const Vector v = random_vector(n, rng);
    CHECK((C.apply(v) - ref * v).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((C.to_dense() - ref).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((Matrix(C.to_sparse()) - ref).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("Toeplitz operator") {
  const auto T = StructuredOperator::toeplitz(TrigSymbol::biharmonic(), 7);
  const Eigen::MatrixXd ref = oracle::toeplitz({1, -4, 6, -4, 1}, 7);
  CHECK(T.to_dense() == ref);
  CHECK(T.kind() == OperatorKind::ToeplitzBanded);
  CHECK(T.symbol() != nullptr);
  std::mt19937 rng(3);
  const Vector v = random_vector(7, rng);
  CHECK((T.apply(v) - ref * v).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(T.diagonal() == Vector::Constant(7, 6.0));
  CHECK_THROWS_AS(matvec(T, Vector::Zero(6)), DimensionMismatch);
  CHECK_THROWS_AS(StructuredOperator::toeplitz(TrigSymbol::laplacian(), 0), BadDimension);
}

TEST_CASE("dense operator keeps its band") {
  Matrix m = Matrix::Zero(5, 5);
  m(0, 0) = 2;
  m(4, 4) = 3;
  m(1, 3) = 1;
  const auto D = StructuredOperator::dense(m);
  CHECK(std::get<Dense>(D.storage()).bandwidth == 2);
  CHECK(D.symbol() == nullptr);
  CHECK_FALSE(D.is_symmetric());
  const Vector v = Vector::LinSpaced(5, 1, 5);
  CHECK((D.apply(v) - m * v).norm() < 1e-14);
  CHECK_THROWS_AS(StructuredOperator::dense(Matrix::Zero(2, 3)), BadDimension);
}

TEST_CASE("Gauss-Seidel sweep") {
  Matrix a(2, 2);
  a << 2, -1, -1, 2;
  Vector x = Vector::Zero(2);
  StructuredOperator::dense(a).gauss_seidel_sweep(x, Vector::Ones(2));
  CHECK(x[0] == doctest::Approx(0.5));
  CHECK(x[1] == doctest::Approx(0.75));

  // each variant against a dense lower-triangular solve
  std::mt19937 rng(11);
  const auto f = TrigSymbol::biharmonic();
  for (const auto& A : {StructuredOperator::toeplitz(f, 12), StructuredOperator::circulant(f + TrigSymbol(std::vector<double>{1.0}), 12),
                        StructuredOperator::dense(oracle::toeplitz({1, -4, 6, -4, 1}, 12))}) {
    const Matrix M = A.to_dense();
    const Vector b = random_vector(12, rng);
    Vector x0 = random_vector(12, rng);
    const Matrix lower = M.triangularView<Eigen::Lower>();
    const Matrix upper = M.triangularView<Eigen::StrictlyUpper>();
    const Vector expected = lower.triangularView<Eigen::Lower>().solve(b - upper * x0);
    A.gauss_seidel_sweep(x0, b);
    CHECK((x0 - expected).cwiseAbs().maxCoeff() < 1e-12);
  }

  Matrix z = Matrix::Identity(3, 3);
  z(1, 1) = 0.0;
  Vector y = Vector::Zero(3);
  CHECK_THROWS_AS(StructuredOperator::dense(z).gauss_seidel_sweep(y, Vector::Ones(3)), ZeroDiagonal);
}

TEST_CASE("coarse dimensions and sampling") {
  CHECK(coarse_dimension(31, 2, TransferVariant::DirichletCut) == 15);
  CHECK(coarse_dimension(26, 3, TransferVariant::DirichletCut) == 8);
  CHECK(coarse_dimension(81, 3, TransferVariant::CirculantCut) == 27);
  CHECK_THROWS_AS(coarse_dimension(10, 2, TransferVariant::DirichletCut), BadDimension);
  CHECK_THROWS_AS(coarse_dimension(10, 3, TransferVariant::CirculantCut), BadDimension);
  CHECK_THROWS_AS(coarse_dimension(2, 3, TransferVariant::DirichletCut), BadDimension);
  const Vector v = Vector::LinSpaced(8, 0, 7);
  const Vector d = downsample(v, 3, TransferVariant::DirichletCut);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2.0);
  CHECK(d[1] == 5.0);
  const Vector up = upsample(d, 3, TransferVariant::DirichletCut, 8);
  CHECK(up.sum() == 7.0);
  CHECK(up[5] == 5.0);
  CHECK(downsample(v, 2, TransferVariant::CirculantCut) == Vector::LinSpaced(4, 0, 6));
}

TEST_CASE("prolongation matches the explicit construction") {
  for (const auto& p : all_symbols()) {
    const int g = p.arity();
    const Index n_dir = g == 2 ? 31 : 26;
    const GridTransfer Pd(p, TransferVariant::DirichletCut, n_dir);
    CHECK((Pd.to_dense() - oracle::dirichlet_prolongation(p.mask(), g, static_cast<int>(n_dir))).cwiseAbs().maxCoeff() ==
          0.0);
    const Index n_circ = g == 2 ? 16 : 27;
    const GridTransfer Pc(p, TransferVariant::CirculantCut, n_circ);
    CHECK((Pc.to_dense() - oracle::circulant_prolongation(p.mask(), g, static_cast<int>(n_circ))).cwiseAbs().maxCoeff() <
          1e-15);
  }
}

TEST_CASE("restriction is the adjoint of prolongation") {
  std::mt19937 rng(5);
  for (const auto& p : all_symbols()) {
    for (auto variant : {TransferVariant::DirichletCut, TransferVariant::CirculantCut}) {
      const Index n = variant == TransferVariant::DirichletCut ? (p.arity() == 2 ? 63 : 80) : (p.arity() == 2 ? 32 : 27);
      const GridTransfer P(p, variant, n);
      for (int trial = 0; trial < 5; ++trial) {
        const Vector u = random_vector(P.coarse_dim(), rng);
        const Vector v = random_vector(n, rng);
        CHECK(std::abs(P.prolong(u).dot(v) - u.dot(P.restrict(v))) < 1e-12);
      }
    }
  }
}

TEST_CASE("prolongation has full column rank") {
  for (const auto& p : all_symbols()) {
    const Index n = p.arity() == 2 ? 31 : 26;
    const Eigen::JacobiSVD<Matrix> svd(GridTransfer(p, TransferVariant::DirichletCut, n).to_dense());
    CHECK(svd.singularValues().minCoeff() > 1e-8);
  }
}

TEST_CASE("Galerkin coarsening") {
  const auto f = TrigSymbol::biharmonic();
  for (const auto& p : all_symbols()) {
    const int g = p.arity();
    const Index n = g == 2 ? 16 : 27;
    const auto A = StructuredOperator::circulant(f, n);
    const GridTransfer P(p, TransferVariant::CirculantCut, n);
    const auto G = galerkin_coarsen(A, P);
    CHECK(G.kind() == OperatorKind::Circulant);
    const Matrix Pm = P.to_dense();
    const Matrix ref = Pm.transpose() * A.to_dense() * Pm;
    CHECK((G.to_dense() - ref).cwiseAbs().maxCoeff() < 1e-10);

    const Index nd = g == 2 ? 31 : 26;
    const auto T = StructuredOperator::toeplitz(f, nd);
    const GridTransfer Pd(p, TransferVariant::DirichletCut, nd);
    const auto Gd = galerkin_coarsen(T, Pd);
    CHECK(Gd.kind() == OperatorKind::Dense);
    const Matrix Pdm = Pd.to_dense();
    const Matrix refd = Pdm.transpose() * T.to_dense() * Pdm;
    CHECK((Gd.to_dense() - refd).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(Gd.is_symmetric(1e-12));
    const Matrix gm = Gd.to_dense();
    CHECK((gm - gm.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(galerkin_coarsen(StructuredOperator::toeplitz(f, 15),
                                   GridTransfer(binary_pseudo_spline(1, 0), TransferVariant::DirichletCut, 31)),
                  DimensionMismatch);
}

TEST_CASE("packaging property") {
  for (auto [n, g] : {std::pair<Index, int>{4, 2}, {8, 2}, {9, 3}, {27, 3}, {6, 2}}) CHECK(packaging_check(n, g) <= 1e-12);
  CHECK_THROWS_AS(packaging_check(7, 2), BadDimension);
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "subdivmg/analysis.hpp"
#include "subdivmg/errors.hpp"

using namespace subdivmg;
using std::numbers::pi;

namespace {

void check_angles(std::vector<double> got, std::vector<double> want) {
  std::sort(got.begin(), got.end());
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-14));
}

oracle::Poly stencil(const TrigSymbol& f) {
  oracle::Poly s;
  for (int j = -f.degree(); j <= f.degree(); ++j) s.push_back(f.coefficient(j));
  return s;
}

}  // namespace

TEST_CASE("g-corners and mirror points") {
  check_angles(g_corners(0.0, 2), {0.0, pi});
  check_angles(g_corners(0.0, 3), {0.0, 2 * pi / 3, 4 * pi / 3});
  check_angles(g_corners(pi / 2, 2), {pi / 2, 3 * pi / 2});
  check_angles(mirror_points(0.0, 2), {pi});
  check_angles(mirror_points(0.0, 3), {2 * pi / 3, 4 * pi / 3});
  check_angles(mirror_points(pi, 2), {0.0});
  CHECK_THROWS_AS(g_corners(0.0, 1), InvalidParameter);
}

TEST_CASE("order of zero") {
  CHECK(order_of_zero(TrigSymbol::laplacian(), 0.0).order == 2);
  CHECK(order_of_zero(TrigSymbol::biharmonic(), 0.0).order == 4);
  CHECK(order_of_zero(TrigSymbol::biharmonic(), 1.0).order == 0);
  CHECK(order_of_zero(TrigSymbol::from_subdivision(binary_pseudo_spline(2, 0)), pi).order == 4);
  CHECK(order_of_zero(binary_pseudo_spline(3, 0), pi).order == 6);
  CHECK(order_of_zero(ternary_pseudo_spline(2, 1), 2 * pi / 3).order == 3);
  // leading derivative of x^4 + ... at 0: (2-2cos x)^2 = x^4 - x^6/6 + ..., so 4! = 24
  CHECK(order_of_zero(TrigSymbol::biharmonic(), 0.0).leading_derivative == doctest::Approx(24.0));
  CHECK_THROWS_AS(order_of_zero(TrigSymbol(std::vector<double>{0.0}), 0.0), InvalidSymbol);
}

TEST_CASE("generation degree") {
  CHECK(generation_degree(binary_pseudo_spline(2, 0)) == 3);
  CHECK(generation_degree(ternary_pseudo_spline(3, 1)) == 3);
  CHECK(generation_degree(binary_pseudo_spline(1, 0)) == 1);
  for (int J = 1; J <= 3; ++J) {
    for (int L = 0; L < J; ++L) CHECK(generation_degree(binary_pseudo_spline(J, L)) == 2 * J - 1);
  }
  for (auto [J, L] : {std::pair{1, 1}, {2, 1}, {3, 1}, {3, 3}, {5, 3}, {5, 5}}) {
    CHECK(generation_degree(ternary_pseudo_spline(J, L)) == J);
  }
  const SubdivisionSymbol one(LaurentPoly<Rational>::constant(Rational(2)), 2);
  CHECK(generation_degree(one) == -1);
}

TEST_CASE("coarse symbol closed form") {
  const auto f1 = coarse_symbol(TrigSymbol::laplacian(), binary_pseudo_spline(1, 0));
  CHECK(f1.degree() == 1);
  CHECK(f1.coefficient(0) == doctest::Approx(1.0));
  CHECK(f1.coefficient(1) == doctest::Approx(-0.5));
}

TEST_CASE("coarse symbol equals the sampled definition") {
  const TrigSymbol one(std::vector<double>{1.0});
  for (const auto& p : {binary_pseudo_spline(2, 1), ternary_pseudo_spline(3, 3), ternary_pseudo_spline(2, 1)}) {
    for (const auto& f : {one, TrigSymbol::biharmonic()}) {
      const auto fc = coarse_symbol(f, p);
      const int g = p.arity();
      for (double x : {0.0, 0.3, 1.1, 2.5, pi}) {
        double direct = 0.0;
        for (int k = 0; k < g; ++k) {
          const double y = x / g + 2 * pi * k / g;
          const double pv = oracle::eval_mask(p.mask(), y);
          direct += f(y) * pv * pv;
        }
        CHECK(fc(x) == doctest::Approx(direct / g).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("coarse symbol matches the dense Galerkin product") {
  const auto f = TrigSymbol::biharmonic();
  const auto p = binary_pseudo_spline(2, 1);
  const int n = 32;
  const Eigen::MatrixXd P = oracle::circulant_prolongation(p.mask(), 2, n);
  const Eigen::MatrixXd G = P.transpose() * oracle::circulant(stencil(f), n) * P;
  const Eigen::MatrixXd C = oracle::circulant(stencil(coarse_symbol(f, p)), n / 2);
  CHECK((G - C).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Cohen condition") {
  const auto p33 = cohen_check(ternary_pseudo_spline(3, 3));
  CHECK(p33.ok);
  CHECK(p33.min_modulus > 0.1);
  const auto p20 = cohen_check(binary_pseudo_spline(2, 0));
  CHECK(p20.ok);
  // (1 + cos x)^2 / 2 is smallest at the interval ends
  CHECK(p20.min_modulus == doctest::Approx(0.5).epsilon(1e-9));
  // 1 - 2 cos 2x vanishes at pi/6
  const SubdivisionSymbol bad(
      LaurentPoly<Rational>::from_dense(-2, {Rational(-1), Rational(0), Rational(1), Rational(0), Rational(-1)}), 2);
  const auto r = cohen_check(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.min_modulus < 1e-9);
  CHECK(std::abs(std::abs(r.argmin) - pi / 6) < 1e-6);
}

TEST_CASE("two-grid certification") {
  const auto bih = TrigSymbol::biharmonic();
  CHECK(certify_tgm(bih, binary_pseudo_spline(2, 1)).tgm_ok == true);
  // m = 4 needs degree >= 1 and p_{1,0} has exactly that
  CHECK(certify_tgm(bih, binary_pseudo_spline(1, 0)).tgm_ok == true);
  CHECK(certify_tgm(TrigSymbol::laplacian(), binary_pseudo_spline(1, 0)).tgm_ok == true);
  // a symbol without the (1+z) factor cannot vanish at the mirror point
  const SubdivisionSymbol flat(LaurentPoly<Rational>::constant(Rational(2)), 2);
  CHECK(certify_tgm(bih, flat).tgm_ok == false);
}

TEST_CASE("V-cycle certification") {
  const auto bih = TrigSymbol::biharmonic();
  const auto ok20 = certify_vcycle(bih, binary_pseudo_spline(2, 0));
  CHECK(ok20.all_ok());
  CHECK(ok20.generation_degree == 3);
  CHECK(ok20.required_order == 4);
  CHECK(certify_vcycle(bih, ternary_pseudo_spline(3, 3)).all_ok());
  const auto bad = certify_vcycle(bih, binary_pseudo_spline(1, 0));
  CHECK_FALSE(bad.all_ok());
  CHECK(bad.vcycle_zero_condition_ok == false);
  CHECK(bad.cohen_ok == true);
  CHECK_FALSE(certify_vcycle(bih, ternary_pseudo_spline(2, 1)).all_ok());
  CHECK(certify_vcycle(TrigSymbol::laplacian(), ternary_pseudo_spline(2, 1)).all_ok());
}

TEST_CASE("certification report formats") {
  const auto r = certify(TrigSymbol::biharmonic(), binary_pseudo_spline(3, 2));
  CHECK(r.all_ok());
  const auto kv = r.to_key_value();
  CHECK(kv.find("all_ok=true") != std::string::npos);
  CHECK(kv.find("generation_degree=5") != std::string::npos);
  CHECK(r.to_text().find("binary-3-2") != std::string::npos);
  CertificationReport empty;
  CHECK(empty.to_key_value().find("tgm_ok=na") != std::string::npos);
}

TEST_CASE("single zero hypothesis") {
  CHECK_NOTHROW(check_single_zero(TrigSymbol::biharmonic(), 0.0));
  // 2 - 2cos 2x also vanishes at pi
  const TrigSymbol two_zeros(std::vector<double>{2.0, 0.0, -1.0});
  CHECK_THROWS_AS(check_single_zero(two_zeros, 0.0), HypothesisViolated);
  CHECK_THROWS_AS(check_single_zero(TrigSymbol::laplacian(), 1.0), HypothesisViolated);
  CHECK_THROWS_AS(certify_vcycle(two_zeros, binary_pseudo_spline(2, 0)), HypothesisViolated);
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdivmg/symbol.hpp"
#include "subdivmg/trig_symbol.hpp"

namespace subdivmg {

/// Omega_g(x) = { x + 2 pi j / g mod 2 pi : j = 0..g-1 }, all in [0, 2 pi).
std::vector<double> g_corners(double x, int g);

/// M_g(x) = Omega_g(x) without x itself.
std::vector<double> mirror_points(double x, int g);

/// Order of the zero of a trigonometric polynomial at a point.
///
/// order == 0 means the function does not vanish there.
struct ZeroOrderReport {
  double location = 0.0;
  int order = 0;
  double leading_derivative = 0.0;
};

ZeroOrderReport order_of_zero(const TrigSymbol& f, double x0);
ZeroOrderReport order_of_zero(const SubdivisionSymbol& p, double x0);

/// Largest d such that p and its first d derivatives vanish at every nontrivial
/// g-th root of unity; -1 if p itself does not vanish at one of them.
int generation_degree(const SubdivisionSymbol& p);

/// Fourier coefficients of f_{j+1}(x) = (1/g) sum_{y in Omega_g(x/g)} f(y) |p(y)|^2.
TrigSymbol coarse_symbol(const TrigSymbol& f, const SubdivisionSymbol& p);

inline constexpr double kCohenTolerance = 1e-9;
inline constexpr int kCohenGridPoints = 4096;

struct CohenResult {
  bool ok = false;
  double min_modulus = 0.0;
  double argmin = 0.0;
};

/// |p(exp(-ix))| > 0 on [-pi/g, pi/g], checked on a grid plus local refinement.
CohenResult cohen_check(const SubdivisionSymbol& p, int grid_points = kCohenGridPoints);

/// Outcome of the symbol-level convergence checks. Verdicts that were not
/// evaluated stay empty.
struct CertificationReport {
  std::string symbol;
  std::string problem;
  int arity = 0;
  double zero_location = 0.0;
  int required_order = 0;  // m, the order of the zero of f
  int generation_degree = -1;
  std::optional<bool> tgm_ok;
  std::optional<bool> vcycle_zero_condition_ok;
  std::optional<bool> cohen_ok;
  double cohen_min_modulus = 0.0;
  std::vector<std::string> details;

  /// True when every evaluated verdict holds.
  bool all_ok() const;
  std::string to_text() const;
  std::string to_key_value() const;
};

/// Two-grid approximation-property check at the zero x0 of f: 2 theta_p(y) >= theta_f(x0)
/// for every mirror point y of x0, plus p(x0) != 0.
CertificationReport certify_tgm(const TrigSymbol& f, const SubdivisionSymbol& p, double x0 = 0.0);

/// V-cycle check for f vanishing only at 0: zero conditions of order m plus Cohen's condition.
CertificationReport certify_vcycle(const TrigSymbol& f, const SubdivisionSymbol& p);

/// certify_tgm at 0 and certify_vcycle merged into one report.
CertificationReport certify(const TrigSymbol& f, const SubdivisionSymbol& p);

/// Throws HypothesisViolated unless f(x0) = 0 and f > 0 away from x0.
void check_single_zero(const TrigSymbol& f, double x0);

}  // namespace subdivmg

#include "subdivmg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "subdivmg/cosine_series.hpp"
#include "subdivmg/errors.hpp"

namespace subdivmg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOrderTolerance = 1e-8;
constexpr int kHypothesisSamples = 8192;
constexpr double kHypothesisExclusion = 1e-3;

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double circular_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

// Smallest m with |D^m h(x0)| above 1e-8 * max|c| * degree^m.
ZeroOrderReport zero_order(std::span<const double> half, double x0, int max_order) {
  double scale = 0.0;
  for (double c : half) scale = std::max(scale, std::abs(c));
  const double degree = std::max<double>(1.0, static_cast<double>(half.size()) - 1.0);
  ZeroOrderReport report{x0, 0, 0.0};
  double tol = kOrderTolerance * scale;
  for (int m = 0; m <= max_order; ++m) {
    const double d = cosine_series_derivative<double>(half, x0, m);
    if (std::abs(d) > tol) {
      report.order = m;
      report.leading_derivative = d;
      return report;
    }
    tol *= degree;
  }
  report.order = max_order + 1;
  return report;
}

std::string verdict(const std::optional<bool>& v) {
  if (!v) return "n/a";
  return *v ? "ok" : "fail";
}

std::string kv_verdict(const std::optional<bool>& v) {
  if (!v) return "na";
  return *v ? "true" : "false";
}

}  // namespace

std::vector<double> g_corners(double x, int g) {
  if (g < 2) throw InvalidParameter("g must be at least 2");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j) out.push_back(wrap_angle(x + kTwoPi * j / g));
  return out;
}

std::vector<double> mirror_points(double x, int g) {
  auto corners = g_corners(x, g);
  corners.erase(corners.begin());
  return corners;
}

ZeroOrderReport order_of_zero(const TrigSymbol& f, double x0) {
  if (f.is_zero()) throw InvalidSymbol("order_of_zero of the zero polynomial");
  // a nonzero even trigonometric polynomial of degree d has zeros of order at most 2d
  return zero_order(f.half(), x0, 2 * std::max(f.degree(), 1));
}

ZeroOrderReport order_of_zero(const SubdivisionSymbol& p, double x0) {
  return zero_order(p.half(), x0, kMaxDerivativeOrder);
}

int generation_degree(const SubdivisionSymbol& p) {
  int theta = kMaxDerivativeOrder + 1;
  for (double y : mirror_points(0.0, p.arity())) {
    theta = std::min(theta, order_of_zero(p, y).order);
  }
  return theta - 1;
}

TrigSymbol coarse_symbol(const TrigSymbol& f, const SubdivisionSymbol& p) {
  const int g = p.arity();
  const int full_degree = f.degree() + 2 * p.radius();
  const int coarse_degree = (full_degree + g - 1) / g;
  const int samples = 4 * (full_degree + 1);

  std::vector<double> values(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double x = kTwoPi * k / samples;
    double acc = 0.0;
    for (double y : g_corners(x / g, g)) {
      const double py = eval(p, y);
      acc += f(y) * py * py;
    }
    values[static_cast<std::size_t>(k)] = acc / g;
  }

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, values);

  std::vector<double> half(static_cast<std::size_t>(coarse_degree + 1), 0.0);
  double scale = 0.0;
  for (int j = 0; j <= coarse_degree; ++j) {
    half[static_cast<std::size_t>(j)] = spectrum[static_cast<std::size_t>(j)].real() / samples;
    scale = std::max(scale, std::abs(half[static_cast<std::size_t>(j)]));
  }
  const double cutoff = 1e-13 * std::max(1.0, scale);
  for (double& a : half) {
    if (std::abs(a) < cutoff) a = 0.0;
  }
  return TrigSymbol(std::move(half));
}

CohenResult cohen_check(const SubdivisionSymbol& p, int grid_points) {
  if (grid_points < 2) throw InvalidParameter("cohen_check needs at least two grid points");
  const double half_width = std::numbers::pi / p.arity();
  const double step = 2.0 * half_width / (grid_points - 1);
  auto modulus = [&](double x) { return std::abs(eval(p, x)); };

  int best = 0;
  double best_value = modulus(-half_width);
  for (int i = 1; i < grid_points; ++i) {
    const double v = modulus(-half_width + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }

  // golden-section refinement on the bracketing cells
  double lo = -half_width + std::max(0, best - 1) * step;
  double hi = -half_width + std::min(grid_points - 1, best + 1) * step;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - ratio * (hi - lo);
  double b = lo + ratio * (hi - lo);
  double fa = modulus(a);
  double fb = modulus(b);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = modulus(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = modulus(b);
    }
  }
  CohenResult result;
  result.argmin = -half_width + best * step;
  result.min_modulus = best_value;
  const double mid = 0.5 * (lo + hi);
  if (modulus(mid) < result.min_modulus) {
    result.min_modulus = modulus(mid);
    result.argmin = mid;
  }
  result.ok = result.min_modulus > kCohenTolerance;
  return result;
}

void check_single_zero(const TrigSymbol& f, double x0) {
  const double scale = f.max_abs_coefficient();
  if (std::abs(f(x0)) > 1e-10 * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "f does not vanish at x0 = " << x0 << " (f(x0) = " << f(x0) << ")";
    throw HypothesisViolated(os.str());
  }
  for (int k = 0; k < kHypothesisSamples; ++k) {
    const double x = kTwoPi * k / kHypothesisSamples;
    if (circular_distance(x, x0) < kHypothesisExclusion) continue;
    if (!(f(x) > 0.0)) {
      std::ostringstream os;
      os << "f is not positive away from x0 = " << x0 << ": f(" << x << ") = " << f(x)
         << ". f has an additional zero x1; certify with a symbol that also satisfies the"
            " conditions at the mirror points of x1, or change the cutting size g so that x1"
            " is not a mirror point of x0";
      throw HypothesisViolated(os.str());
    }
  }
}

CertificationReport certify_tgm(const TrigSymbol& f, const SubdivisionSymbol& p, double x0) {
  check_single_zero(f, x0);
  CertificationReport report;
  report.symbol = p.label();
  report.problem = f.label();
  report.arity = p.arity();
  report.zero_location = x0;
  report.required_order = order_of_zero(f, x0).order;
  report.generation_degree = generation_degree(p);

  const int m = report.required_order;
  bool ok = true;
  for (double y : mirror_points(x0, p.arity())) {
    const int theta = order_of_zero(p, y).order;
    const bool pass = 2 * theta >= m;
    ok = ok && pass;
    std::ostringstream os;
    os << "tgm: theta_p(" << y << ") = " << theta << ", need 2*theta >= " << m
       << (pass ? " ok" : " FAIL");
    report.details.push_back(os.str());
  }
  const double p_at_zero = std::abs(eval(p, x0));
  const bool nonzero = p_at_zero > kCohenTolerance;
  ok = ok && nonzero;
  {
    std::ostringstream os;
    os << "tgm: |p(x0)| = " << p_at_zero << (nonzero ? " ok" : " FAIL");
    report.details.push_back(os.str());
  }
  report.tgm_ok = ok;
  return report;
}

CertificationReport certify_vcycle(const TrigSymbol& f, const SubdivisionSymbol& p) {
  check_single_zero(f, 0.0);
  CertificationReport report;
  report.symbol = p.label();
  report.problem = f.label();
  report.arity = p.arity();
  report.required_order = order_of_zero(f, 0.0).order;
  report.generation_degree = generation_degree(p);

  const int m = report.required_order;
  const bool degree_ok = report.generation_degree >= m - 1;
  const double p0 = eval(p, 0.0);
  const bool normalized = std::abs(p0 - p.arity()) <= 1e-12 * p.arity();
  report.vcycle_zero_condition_ok = degree_ok && normalized;
  {
    std::ostringstream os;
    os << "vcycle: generation degree " << report.generation_degree << ", need >= " << m - 1
       << (degree_ok ? " ok" : " FAIL");
    report.details.push_back(os.str());
    std::ostringstream os2;
    os2 << "vcycle: p(0) = " << p0 << ", need " << p.arity() << (normalized ? " ok" : " FAIL");
    report.details.push_back(os2.str());
  }

  const CohenResult cohen = cohen_check(p);
  report.cohen_ok = cohen.ok;
  report.cohen_min_modulus = cohen.min_modulus;
  {
    std::ostringstream os;
    os << "cohen: min |p| on [-pi/g, pi/g] = " << cohen.min_modulus << " at x = " << cohen.argmin
       << (cohen.ok ? " ok" : " FAIL");
    report.details.push_back(os.str());
  }
  return report;
}

CertificationReport certify(const TrigSymbol& f, const SubdivisionSymbol& p) {
  CertificationReport report = certify_vcycle(f, p);
  const CertificationReport tgm = certify_tgm(f, p, 0.0);
  report.tgm_ok = tgm.tgm_ok;
  report.details.insert(report.details.begin(), tgm.details.begin(), tgm.details.end());
  return report;
}

bool CertificationReport::all_ok() const {
  for (const auto& v : {tgm_ok, vcycle_zero_condition_ok, cohen_ok}) {
    if (v && !*v) return false;
  }
  return true;
}

std::string CertificationReport::to_text() const {
  std::ostringstream os;
  os << "symbol:            " << symbol << " (arity " << arity << ")\n";
  if (!problem.empty()) os << "problem symbol:    " << problem << '\n';
  os << "generation degree: " << generation_degree << '\n';
  if (required_order > 0) os << "zero order m:      " << required_order << '\n';
  os << "cohen min |p|:     " << cohen_min_modulus << '\n';
  os << "TGM:               " << verdict(tgm_ok) << '\n';
  os << "V-cycle zero cond: " << verdict(vcycle_zero_condition_ok) << '\n';
  os << "Cohen:             " << verdict(cohen_ok) << '\n';
  for (const auto& d : details) os << "  " << d << '\n';
  return os.str();
}

std::string CertificationReport::to_key_value() const {
  std::ostringstream os;
  os.precision(17);
  os << "symbol=" << symbol << '\n'
     << "arity=" << arity << '\n'
     << "problem=" << problem << '\n'
     << "generation_degree=" << generation_degree << '\n'
     << "required_order=" << required_order << '\n'
     << "tgm_ok=" << kv_verdict(tgm_ok) << '\n'
     << "vcycle_zero_condition_ok=" << kv_verdict(vcycle_zero_condition_ok) << '\n'
     << "cohen_ok=" << kv_verdict(cohen_ok) << '\n'
     << "cohen_min_modulus=" << cohen_min_modulus << '\n'
     << "all_ok=" << (all_ok() ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace subdivmg

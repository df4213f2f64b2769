#include "subdivmg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

#include <fmt/format.h>

#include "subdivmg/errors.hpp"
#include "subdivmg/problems.hpp"

namespace subdivmg {

SubdivisionSymbol SchemeSpec::build() const {
  return family == SchemeFamily::Binary ? binary_pseudo_spline(J, L) : ternary_pseudo_spline(J, L);
}

std::string problem_label(const std::string& problem, int degree) {
  if (problem == "iga-laplacian") return fmt::format("iga-laplacian-mu{}", degree);
  return problem;
}

BenchRow run_case(const std::string& problem, int degree, const SchemeSpec& scheme, Index n,
                  const CycleParams& cycle) {
  const SubdivisionSymbol p = scheme.build();
  ProblemInstance inst = [&] {
    if (problem == "biharmonic") return biharmonic_problem(n);
    if (problem == "iga-laplacian") return iga_laplacian_problem_for_dim(n, degree);
    throw InvalidParameter("unknown problem id '" + problem + "'");
  }();
  const int g = p.arity();
  const MgHierarchy h = build_hierarchy(inst.A, p, TransferVariant::DirichletCut, g * g - 1, cycle.cycles);
  SolveOptions opts;
  opts.pre.sweeps = cycle.pre;
  opts.post.sweeps = cycle.post;
  opts.tol = cycle.tol;
  opts.max_iter = cycle.max_iter;
  BenchRow row{problem_label(problem, degree), p.label(), n, g, mgm_solve(h, inst.b, opts)};
  row.report.solution.resize(0);
  return row;
}

unsigned worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUBDIVMG_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return std::min(hw, static_cast<unsigned>(requested));
  }
  return hw;
}

std::vector<BenchRow> run_bench(const std::vector<BenchSpec>& specs) {
  struct Task {
    const BenchSpec* spec;
    SchemeSpec scheme;
    Index n;
  };
  std::vector<Task> tasks;
  for (const auto& spec : specs) {
    for (Index n : spec.sizes) {
      for (const auto& scheme : spec.schemes) tasks.push_back({&spec, scheme, n});
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        const Task& t = tasks[k];
        rows[k] = run_case(t.spec->problem, t.spec->degree, t.scheme, t.n, t.spec->cycle);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned count = std::min<std::size_t>(worker_count(), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

namespace {

std::vector<SchemeSpec> binary_schemes() {
  return {{SchemeFamily::Binary, 1, 0}, {SchemeFamily::Binary, 2, 0}, {SchemeFamily::Binary, 2, 1},
          {SchemeFamily::Binary, 3, 0}, {SchemeFamily::Binary, 3, 1}, {SchemeFamily::Binary, 3, 2}};
}

std::vector<SchemeSpec> ternary_schemes() {
  return {{SchemeFamily::Ternary, 1, 1}, {SchemeFamily::Ternary, 2, 1}, {SchemeFamily::Ternary, 3, 1},
          {SchemeFamily::Ternary, 3, 3}, {SchemeFamily::Ternary, 5, 3}, {SchemeFamily::Ternary, 5, 5}};
}

Index power_minus_one(int g, int k) {
  Index v = 1;
  for (int i = 0; i < k; ++i) v *= g;
  return v - 1;
}

}  // namespace

std::vector<BenchSpec> table_spec(int table, bool small) {
  const int shift = small ? 1 : 0;
  switch (table) {
    case 1: {
      BenchSpec s;
      s.schemes = binary_schemes();
      for (int k = 10; k <= 12; ++k) s.sizes.push_back(power_minus_one(2, k - shift));
      return {s};
    }
    case 2: {
      BenchSpec s;
      s.schemes = ternary_schemes();
      for (int k = 6; k <= 8; ++k) s.sizes.push_back(power_minus_one(3, k - shift));
      return {s};
    }
    case 3:
    case 4: {
      std::vector<BenchSpec> out;
      for (int degree : {3, 10, 16}) {
        BenchSpec s;
        s.problem = "iga-laplacian";
        s.degree = degree;
        s.schemes = table == 3 ? binary_schemes() : ternary_schemes();
        s.sizes = {table == 3 ? power_minus_one(2, 9 - shift) : power_minus_one(3, 6 - shift)};
        out.push_back(s);
      }
      return out;
    }
    default:
      throw InvalidParameter(fmt::format("unknown table {}; expected 1, 2, 3 or 4", table));
  }
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << csv_header() << '\n';
  for (const auto& r : rows) os << csv_row(r.problem, r.symbol, r.n, r.arity, r.report) << '\n';
}

Curve sample_symbol(const SubdivisionSymbol& p, int samples) {
  if (samples < 2) throw InvalidParameter("need at least two samples");
  Curve c{p.label(), {}, {}};
  for (int k = 0; k < samples; ++k) {
    const double x = std::numbers::pi * k / (samples - 1);
    c.x.push_back(x);
    c.value.push_back(eval(p, x));
  }
  return c;
}

Curve sample_iga_symbol(int degree, int samples) {
  if (samples < 2) throw InvalidParameter("need at least two samples");
  Curve c{fmt::format("iga-mu{}", degree), {}, {}};
  double peak = 0.0;
  for (int k = 0; k <= 4096; ++k) peak = std::max(peak, std::abs(iga_symbol(degree, std::numbers::pi * k / 4096)));
  for (int k = 0; k < samples; ++k) {
    const double x = std::numbers::pi * k / (samples - 1);
    c.x.push_back(x);
    c.value.push_back(iga_symbol(degree, x) / peak);
  }
  return c;
}

void write_curves_csv(std::ostream& os, const std::vector<Curve>& curves) {
  os << "curve,x,value\n";
  for (const auto& c : curves) {
    for (std::size_t k = 0; k < c.x.size(); ++k) os << fmt::format("{},{:.10f},{:.12e}\n", c.name, c.x[k], c.value[k]);
  }
}

}  // namespace subdivmg

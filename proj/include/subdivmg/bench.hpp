#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "subdivmg/multigrid.hpp"
#include "subdivmg/symbol.hpp"

namespace subdivmg {

enum class SchemeFamily { Binary, Ternary };

struct SchemeSpec {
  SchemeFamily family = SchemeFamily::Binary;
  int J = 1;
  int L = 0;

  SubdivisionSymbol build() const;
  int arity() const { return family == SchemeFamily::Binary ? 2 : 3; }
};

struct CycleParams {
  int cycles = 1;
  int pre = 1;
  int post = 1;
  double tol = 1e-7;
  int max_iter = 5000;
};

/// problem is "biharmonic" or "iga-laplacian"; degree is only used by the latter.
struct BenchSpec {
  std::string problem = "biharmonic";
  int degree = 3;
  std::vector<SchemeSpec> schemes;
  std::vector<Index> sizes;
  CycleParams cycle{};
};

struct BenchRow {
  std::string problem;
  std::string symbol;
  Index n = 0;
  int arity = 2;
  SolveReport report;
};

/// Builds the problem, a DirichletCut hierarchy down to g^2 - 1 and runs the V-cycle.
BenchRow run_case(const std::string& problem, int degree, const SchemeSpec& scheme, Index n,
                  const CycleParams& cycle);

/// Rows in (size, scheme) order of the spec, computed on up to
/// SUBDIVMG_THREADS worker threads (default: hardware concurrency).
std::vector<BenchRow> run_bench(const std::vector<BenchSpec>& specs);

/// Row sets of the four reference tables. small = one size down.
std::vector<BenchSpec> table_spec(int table, bool small = false);

std::string problem_label(const std::string& problem, int degree);
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

/// Worker count from SUBDIVMG_THREADS, clamped to [1, hardware concurrency].
unsigned worker_count();

struct Curve {
  std::string name;
  std::vector<double> x;
  std::vector<double> value;
};

/// 512 uniform samples of p on [0, pi].
Curve sample_symbol(const SubdivisionSymbol& p, int samples = 512);
/// 512 uniform samples of the IgA symbol on [0, pi], divided by its maximum there.
Curve sample_iga_symbol(int degree, int samples = 512);
void write_curves_csv(std::ostream& os, const std::vector<Curve>& curves);

}  // namespace subdivmg

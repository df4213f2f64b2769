#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "subdivmg/analysis.hpp"
#include "subdivmg/bench.hpp"
#include "subdivmg/errors.hpp"
#include "subdivmg/problems.hpp"

namespace {

using namespace subdivmg;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct SymbolChoice {
  std::pair<int, int> binary{0, 0};
  std::pair<int, int> ternary{0, 0};
  std::string file;
  CLI::Option* binary_opt = nullptr;
  CLI::Option* ternary_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void add_to(CLI::App& app, bool allow_file) {
    binary_opt = app.add_option("--binary", binary, "binary pseudo-spline J L");
    ternary_opt = app.add_option("--ternary", ternary, "ternary pseudo-spline J L");
    if (allow_file) file_opt = app.add_option("--symbol-file", file, "mask in the symbol text format");
    binary_opt->excludes(ternary_opt);
    if (file_opt != nullptr) {
      file_opt->excludes(binary_opt);
      file_opt->excludes(ternary_opt);
    }
  }

  SubdivisionSymbol build() const {
    if (binary_opt->count() > 0) return binary_pseudo_spline(binary.first, binary.second);
    if (ternary_opt->count() > 0) return ternary_pseudo_spline(ternary.first, ternary.second);
    if (file_opt != nullptr && file_opt->count() > 0) {
      std::ifstream in(file);
      if (!in) throw subdivmg::ParseError("cannot open symbol file '" + file + "'");
      return read_symbol(in);
    }
    throw InvalidParameter("one of --binary, --ternary or --symbol-file is required");
  }

  std::optional<SchemeSpec> scheme() const {
    if (binary_opt->count() > 0) return SchemeSpec{SchemeFamily::Binary, binary.first, binary.second};
    if (ternary_opt->count() > 0) return SchemeSpec{SchemeFamily::Ternary, ternary.first, ternary.second};
    return std::nullopt;
  }
};

TrigSymbol problem_symbol(const std::string& id) {
  if (id == "biharmonic") return TrigSymbol::biharmonic();
  if (id == "laplacian") return TrigSymbol::laplacian();
  throw InvalidParameter("unknown problem '" + id + "' (expected biharmonic or laplacian)");
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidParameter("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

bool is_usage_error(const subdivmg::Error& e) {
  return dynamic_cast<const subdivmg::ParseError*>(&e) || dynamic_cast<const InvalidOrder*>(&e) ||
         dynamic_cast<const InvalidParameter*>(&e) || dynamic_cast<const InvalidDegree*>(&e) ||
         dynamic_cast<const BadDimension*>(&e) || dynamic_cast<const IncompatibleDimension*>(&e) ||
         dynamic_cast<const InvalidSymbol*>(&e);
}

int cmd_analyze(const SymbolChoice& sym, const std::string& problem, const std::string& format) {
  const SubdivisionSymbol p = sym.build();
  if (!problem.empty()) {
    const CertificationReport report = certify(problem_symbol(problem), p);
    std::cout << (format == "kv" ? report.to_key_value() : report.to_text());
    return report.all_ok() ? 0 : kExitFailure;
  }
  const int degree = generation_degree(p);
  const FactorSplit split = smoothing_factor_split(p);
  const CohenResult cohen = cohen_check(p);
  if (format == "kv") {
    std::cout << "symbol=" << p.label() << "\narity=" << p.arity() << "\ngeneration_degree=" << degree
              << "\nfactor_power=" << split.factor_power << "\ncohen_ok=" << (cohen.ok ? "true" : "false")
              << "\ncohen_min_modulus=" << cohen.min_modulus << "\nall_ok=" << (cohen.ok ? "true" : "false")
              << '\n';
  } else {
    std::cout << "symbol             " << p.label() << "\narity              " << p.arity()
              << "\ngeneration degree  " << degree << "\nfactor power       " << split.factor_power
              << "\ncohen              " << (cohen.ok ? "ok" : "FAIL") << " (min |p| = " << cohen.min_modulus
              << " at x = " << cohen.argmin << ")\n";
  }
  return cohen.ok ? 0 : kExitFailure;
}

int cmd_solve(const SymbolChoice& sym, const std::string& problem, Index n, int degree, const CycleParams& cycle,
              const std::string& out) {
  const auto scheme = sym.scheme();
  if (!scheme) throw InvalidParameter("solve needs --binary J L or --ternary J L");
  if (problem != "biharmonic" && problem != "iga-laplacian") {
    throw InvalidParameter("unknown problem '" + problem + "' (expected biharmonic or iga-laplacian)");
  }
  const BenchRow row = run_case(problem, degree, *scheme, n, cycle);
  Output o(out);
  write_csv(o.stream(), {row});
  if (!row.report.warning.empty()) std::cerr << "warning: " << row.report.warning << '\n';
  return row.report.converged ? 0 : kExitFailure;
}

int cmd_bench(int table, bool small, const std::string& out) {
  const auto rows = run_bench(table_spec(table, small));
  Output o(out);
  write_csv(o.stream(), rows);
  return 0;
}

int cmd_plot(int figure, const std::vector<std::pair<int, int>>& binaries,
             const std::vector<std::pair<int, int>>& ternaries, const std::vector<int>& degrees, int samples,
             const std::string& out) {
  std::vector<Curve> curves;
  std::vector<std::pair<int, int>> b = binaries;
  std::vector<std::pair<int, int>> t = ternaries;
  std::vector<int> mu = degrees;
  if (figure == 1) {
    b.insert(b.end(), {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}});
    t.insert(t.end(), {{1, 1}, {2, 1}, {3, 1}, {3, 3}, {5, 3}, {5, 5}});
  } else if (figure == 2) {
    mu.insert(mu.end(), {3, 10, 16});
  } else if (figure != 0) {
    throw InvalidParameter("unknown figure " + std::to_string(figure) + " (expected 1 or 2)");
  }
  for (const auto& [J, L] : b) curves.push_back(sample_symbol(binary_pseudo_spline(J, L), samples));
  for (const auto& [J, L] : t) curves.push_back(sample_symbol(ternary_pseudo_spline(J, L), samples));
  for (int m : mu) curves.push_back(sample_iga_symbol(m, samples));
  if (curves.empty()) throw InvalidParameter("nothing to plot; pass --figure, --binary, --ternary or --iga-mu");
  Output o(out);
  write_curves_csv(o.stream(), curves);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multigrid with subdivision-based grid transfer operators"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "certify a subdivision symbol");
  SymbolChoice analyze_sym;
  analyze_sym.add_to(*analyze, true);
  std::string analyze_problem;
  std::string format = "text";
  analyze->add_option("--problem", analyze_problem, "biharmonic or laplacian");
  analyze->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}));

  auto* solve = app.add_subcommand("solve", "run the V-cycle on one problem");
  SymbolChoice solve_sym;
  solve_sym.add_to(*solve, false);
  std::string solve_problem = "biharmonic";
  Index n = 1023;
  int degree = 3;
  CycleParams cycle;
  std::string solve_out;
  solve->add_option("--problem", solve_problem, "biharmonic or iga-laplacian");
  solve->add_option("--n", n, "system dimension")->check(CLI::PositiveNumber);
  solve->add_option("--mu", degree, "spline degree for iga-laplacian");
  solve->add_option("--tol", cycle.tol, "relative residual tolerance")->check(CLI::Range(0.0, 1.0));
  solve->add_option("--cycles", cycle.cycles, "recursion count s (1 = V-cycle)")->check(CLI::PositiveNumber);
  solve->add_option("--pre", cycle.pre, "Gauss-Seidel pre-smoothing sweeps")->check(CLI::NonNegativeNumber);
  solve->add_option("--post", cycle.post, "Gauss-Seidel post-smoothing sweeps")->check(CLI::NonNegativeNumber);
  solve->add_option("--max-iter", cycle.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  solve->add_option("--out", solve_out, "CSV output path");

  auto* bench = app.add_subcommand("bench", "reproduce a reference table");
  int table = 1;
  bool small = false;
  std::string bench_out;
  bench->add_option("--table", table, "table number")->required()->check(CLI::Range(1, 4));
  bench->add_flag("--small", small, "use one size down");
  bench->add_option("--out", bench_out, "CSV output path");

  auto* plot = app.add_subcommand("plot", "sample symbols on [0, pi]");
  int figure = 0;
  std::vector<std::pair<int, int>> plot_binary;
  std::vector<std::pair<int, int>> plot_ternary;
  std::vector<int> plot_mu;
  int samples = 512;
  std::string plot_out;
  plot->add_option("--figure", figure, "1: pseudo-spline symbols, 2: IgA symbols");
  plot->add_option("--binary", plot_binary, "binary pseudo-spline J L (repeatable)");
  plot->add_option("--ternary", plot_ternary, "ternary pseudo-spline J L (repeatable)");
  plot->add_option("--iga-mu", plot_mu, "IgA spline degrees");
  plot->add_option("--samples", samples, "samples per curve")->check(CLI::Range(2, 1 << 20));
  plot->add_option("--out", plot_out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_sym, analyze_problem, format);
    if (*solve) return cmd_solve(solve_sym, solve_problem, n, degree, cycle, solve_out);
    if (*bench) return cmd_bench(table, small, bench_out);
    if (*plot) return cmd_plot(figure, plot_binary, plot_ternary, plot_mu, samples, plot_out);
  } catch (const subdivmg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "subdivmg/bench.hpp"
#include "subdivmg/errors.hpp"

using namespace subdivmg;

namespace {

// CSV text without the wall time column.
std::string strip_times(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream in(os.str());
  std::string out;
  for (std::string line; std::getline(in, line);) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

}  // namespace

TEST_CASE("table specs") {
  const auto t1 = table_spec(1);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].sizes == std::vector<Index>{1023, 2047, 4095});
  CHECK(t1[0].schemes.size() == 6);
  CHECK(table_spec(1, true)[0].sizes == std::vector<Index>{511, 1023, 2047});
  CHECK(table_spec(2)[0].sizes == std::vector<Index>{728, 2186, 6560});
  const auto t4 = table_spec(4);
  REQUIRE(t4.size() == 3);
  CHECK(t4[1].degree == 10);
  CHECK(t4[1].problem == "iga-laplacian");
  CHECK(t4[0].sizes == std::vector<Index>{728});
  CHECK(table_spec(3, true)[0].sizes == std::vector<Index>{255});
  CHECK(t4[0].schemes[0].family == SchemeFamily::Ternary);
  CHECK_THROWS_AS(table_spec(5), InvalidParameter);
}

TEST_CASE("single case") {
  const auto row = run_case("biharmonic", 0, {SchemeFamily::Binary, 2, 1}, 1023, {});
  CHECK(row.symbol == "binary-2-1");
  CHECK(row.arity == 2);
  CHECK(row.report.iterations == 19);
  CHECK(row.report.conv_rate == doctest::Approx(0.4275).epsilon(1e-3));
  CHECK_THROWS_AS(run_case("poisson", 0, {}, 31, {}), InvalidParameter);
  CHECK_THROWS_AS(run_case("biharmonic", 0, {}, 30, {}), IncompatibleDimension);
}

TEST_CASE("bench output is deterministic and ordered") {
  const auto specs = table_spec(3, true);
  setenv("SUBDIVMG_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  const auto serial = run_bench(specs);
  setenv("SUBDIVMG_THREADS", "4", 1);
  const auto parallel = run_bench(specs);
  unsetenv("SUBDIVMG_THREADS");
  REQUIRE(serial.size() == 18);
  CHECK(strip_times(serial) == strip_times(parallel));
  CHECK(serial[0].problem == "iga-laplacian-mu3");
  CHECK(serial[0].symbol == "binary-1-0");
  CHECK(serial[17].problem == "iga-laplacian-mu16");
  CHECK(serial[17].symbol == "binary-3-2");

  std::ostringstream os;
  write_csv(os, serial);
  CHECK(os.str().rfind("problem,symbol,n,g,iterations,conv_rate,converged,wall_time_s\n", 0) == 0);
}

TEST_CASE("symbol samples") {
  const auto c = sample_symbol(binary_pseudo_spline(1, 0));
  REQUIRE(c.x.size() == 512);
  CHECK(c.x.front() == 0.0);
  CHECK(c.x.back() == doctest::Approx(std::numbers::pi));
  CHECK(c.value.front() == doctest::Approx(2.0));
  CHECK(std::abs(c.value.back()) < 1e-15);
  CHECK(sample_symbol(ternary_pseudo_spline(5, 3)).value.front() == doctest::Approx(3.0));

  const auto iga = sample_iga_symbol(16);
  double peak = 0.0;
  for (double v : iga.value) peak = std::max(peak, v);
  CHECK(peak <= 1.0 + 1e-12);
  CHECK(peak > 0.99);
  CHECK(iga.value.front() == 0.0);
  CHECK(iga.value.back() < sample_iga_symbol(10).value.back());
  CHECK(sample_iga_symbol(10).value.back() < sample_iga_symbol(3).value.back());

  std::ostringstream os;
  write_curves_csv(os, {c});
  CHECK(os.str().rfind("curve,x,value\nbinary-1-0,0.0000000000,2.", 0) == 0);
  CHECK_THROWS_AS(sample_symbol(binary_pseudo_spline(1, 0), 1), InvalidParameter);
}

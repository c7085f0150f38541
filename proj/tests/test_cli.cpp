#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "jcx/cli.hpp"
#include "jcx/measures.hpp"
#include "jcx/report.hpp"

using namespace jcx;
using nlohmann::json;
using std::numbers::e;
using std::numbers::pi;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Scratch file in the system temp directory, removed on scope exit.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::filesystem::remove(path); }
  std::string read() const {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
};

}  // namespace

TEST_CASE("measure: uniform density") {
  const Run r = run({"measure", "-n", "0", "-a", "0", "-b", "0"});
  REQUIRE(r.status == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["c_lmc"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["variance"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  for (const char* key : {"n", "alpha", "beta", "variance", "fisher", "shannon_E", "shannon_I", "shannon_S",
                          "spreading_length", "w2", "c_cr", "c_fs", "c_lmc", "errors"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("measure: Legendre n = 1") {
  const Run r = run({"measure", "-n", "1"});
  REQUIRE(r.status == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["fisher"].get<double>() == 12.0);
  // F V = 12 * 3/5
  CHECK(j["c_cr"].get<double>() == doctest::Approx(7.2).epsilon(1e-14));
  CHECK(j["w2"].get<double>() == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("measure: infinite Fisher information") {
  const Run r = run({"measure", "-n", "3", "-a", "0.5", "-b", "0.5"});
  REQUIRE(r.status == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["fisher"] == "inf");
  CHECK(j["c_cr"] == "inf");
  CHECK(j["c_fs"] == "inf");
  CHECK(std::isfinite(j["c_lmc"].get<double>()));
}

TEST_CASE("measure: unsupported W2 is reported, not fatal") {
  const Run r = run({"measure", "-n", "2", "-a", "-0.75", "-b", "0"});
  REQUIRE(r.status == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["w2"] == "unsupported");
  CHECK(j["c_lmc"] == "unsupported");
}

TEST_CASE("measure: JSON round trip is exact") {
  for (auto [n, a, b] : {std::tuple{0, 0.0, 0.0}, std::tuple{4, 2.0, 3.0}, std::tuple{3, 0.5, 0.5}, std::tuple{2, -0.75, 0.1}}) {
    const MeasureSet m = compute_measures(PolyParams(n, a, b));
    const MeasureSet back = measure_from_json(measure_to_json(m));
    CHECK(back.params == m.params);
    CHECK(back.variance == m.variance);
    CHECK(back.fisher == m.fisher);
    CHECK(back.shannon_E == m.shannon_E);
    CHECK(back.shannon_I == m.shannon_I);
    CHECK(back.shannon_S == m.shannon_S);
    CHECK(back.spreading_length == m.spreading_length);
    CHECK(back.w2 == m.w2);
    CHECK(back.log_lq_norms == m.log_lq_norms);
    CHECK(back.c_cr == m.c_cr);
    CHECK(back.c_fs == m.c_fs);
    CHECK(back.c_lmc == m.c_lmc);
    CHECK(back.errors == m.errors);
    CHECK(measure_to_json(back) == measure_to_json(m));
  }
}

TEST_CASE("measure: outputs are internally consistent") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"-n", "5", "-a", "2", "-b", "3"},
                                                                {"-n", "7", "-a", "0", "-b", "2"},
                                                                {"-n", "6", "-a", "0", "-b", "0"}}) {
    std::vector<std::string> full{"measure"};
    full.insert(full.end(), args.begin(), args.end());
    const Run r = run(full);
    REQUIRE(r.status == kExitOk);
    const json j = json::parse(r.out);
    const double f = j["fisher"].get<double>();
    const double v = j["variance"].get<double>();
    const double ls = j["spreading_length"].get<double>();
    CHECK(j["c_cr"].get<double>() == doctest::Approx(f * v).epsilon(1e-12));
    CHECK(j["c_fs"].get<double>() == doctest::Approx(f * ls * ls / (2.0 * pi * e)).epsilon(1e-12));
    CHECK(j["c_lmc"].get<double>() == doctest::Approx(j["w2"].get<double>() * ls).epsilon(1e-12));
  }
}

TEST_CASE("measure: byte-identical reruns") {
  const std::vector<std::string> args{"measure", "-n", "9", "-a", "1.5", "-b", "2.5", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> json_args{"measure", "-n", "9", "-a", "1.5", "-b", "2.5"};
  CHECK(run(json_args).out == run(json_args).out);
}

TEST_CASE("measure: CSV columns") {
  const Run r = run({"measure", "-n", "3", "-a", "0.5", "-b", "0.5", "--format", "csv"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[0].size() == rows[1].size());
  std::map<std::string, std::string> cell;
  for (std::size_t i = 0; i < rows[0].size(); ++i) cell[rows[0][i]] = rows[1][i];
  for (const char* key : {"n", "alpha", "beta", "variance", "fisher", "shannon_E", "shannon_I", "shannon_S",
                          "spreading_length", "w2", "c_cr", "c_fs", "c_lmc", "errors"}) {
    CHECK(cell.count(key) == 1);
  }
  CHECK(cell["fisher"] == "inf");
  CHECK(cell["n"] == "3");
}

TEST_CASE("measure: --out writes the file") {
  TempFile file("jcx_test_measure.json");
  const Run r = run({"measure", "-n", "2", "--out", file.path.string()});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.empty());
  CHECK(json::parse(file.read())["n"].get<int>() == 2);
}

TEST_CASE("measure: --verify agrees with the direct entropy") {
  CHECK(run({"measure", "-n", "1", "-a", "0", "-b", "2", "--verify"}).status == kExitOk);
}

TEST_CASE("invalid arguments exit with 2") {
  CHECK(run({"measure", "-n", "-1"}).status == kExitInvalidArguments);
  CHECK(run({"measure", "-n", "2", "-a", "-1"}).status == kExitInvalidArguments);
  CHECK(run({"measure", "-n", "2", "--format", "xml"}).status == kExitInvalidArguments);
  CHECK(run({"measure", "-n", "2", "--tol", "0"}).status == kExitInvalidArguments);
  CHECK(run({"measure"}).status == kExitInvalidArguments);
  CHECK(run({"frobnicate"}).status == kExitInvalidArguments);
  CHECK(run({"asym", "--regime", "sideways", "--measure", "ls"}).status == kExitInvalidArguments);
  CHECK(run({"measure", "-n", "2", "--max-nodes", "5"}).status == kExitInvalidArguments);
  const Run bad = run({"measure", "-n", "2", "-b", "-3"});
  CHECK(!bad.err.empty());
}

TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).status == kExitOk); }

TEST_CASE("asym: predictions") {
  const Run ls = run({"asym", "--regime", "degree", "--measure", "ls"});
  REQUIRE(ls.status == kExitOk);
  const json j = json::parse(ls.out);
  CHECK(j["coefficient_or_value"].get<double>() == doctest::Approx(pi / e).epsilon(1e-15));
  CHECK(j["measure"] == "ls");
  CHECK(j["regime"] == "degree");
  CHECK(j["law"] == "constant");
  CHECK(j.contains("applicability"));

  const json cfs = json::parse(run({"asym", "--regime", "alpha", "--measure", "cfs", "-n", "1", "-b", "2"}).out);
  CHECK(cfs["coefficient_or_value"].get<double>() == doctest::Approx(7.0 / (24.0 * pi * e)).epsilon(1e-14));

  const json clmc = json::parse(run({"asym", "--regime", "degree", "--measure", "clmc", "-a", "1", "-b", "1"}).out);
  CHECK(clmc["coefficient_or_value"].get<double>() == doctest::Approx(3.0 / (pi * e)).epsilon(1e-14));

  const json derived =
      json::parse(run({"asym", "--regime", "alpha", "--measure", "clmc", "-n", "0", "-b", "2", "--variant", "derived"}).out);
  CHECK(derived["coefficient_or_value"].get<double>() == doctest::Approx(3.0 / 32.0).epsilon(1e-14));
}

TEST_CASE("asym: unsupported class exits with 3 and names the predicate") {
  const Run r = run({"asym", "--regime", "degree", "--measure", "fisher", "-a", "0.5", "-b", "0.5"});
  CHECK(r.status == kExitUnsupportedClass);
  CHECK(r.err.find("alpha>1, beta>1") != std::string::npos);
  CHECK(run({"asym", "--regime", "alpha", "--measure", "ccr", "-n", "1", "-b", "0.5"}).status == kExitUnsupportedClass);
}

TEST_CASE("sweep: degree regime C_CR") {
  const Run r = run({"sweep", "--regime", "degree", "--measure", "ccr", "--n-grid", "25:100:2"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"sweep_value", "numeric", "predicted", "ratio", "error_estimate"});
  CHECK(rows[3][0] == "100");
  // 2n(n+1)[(n+1)^2/(2n+3) + n^2/(2n-1)] / (2n^3) at n = 100
  const double n = 100.0;
  const double exact = 2.0 * n * (n + 1.0) * ((n + 1.0) * (n + 1.0) / (2.0 * n + 3.0) + n * n / (2.0 * n - 1.0));
  CHECK(std::stod(rows[3][3]) == doctest::Approx(exact / (2.0 * n * n * n)).epsilon(1e-14));
  CHECK(std::stod(rows[3][3]) == doctest::Approx(1.01507).epsilon(1e-5));
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][0]) > std::stod(rows[i - 1][0]));
}

TEST_CASE("sweep: alpha regime Fisher approaches the law monotonically") {
  const Run r = run({"sweep", "--regime", "alpha", "--measure", "fisher", "-n", "0", "-b", "2", "--alpha-grid",
                     "100:10000:10"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  double previous = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double gap = std::fabs(std::stod(rows[i][3]) - 1.0);
    CHECK(gap < previous);
    previous = gap;
  }
}

TEST_CASE("sweep: spreading length near pi/e at n = 100") {
  const Run r = run({"sweep", "--regime", "degree", "--measure", "ls", "--n-grid", "100:100:2"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(std::fabs(std::stod(rows[1][3]) - 1.0) <= 0.05);
  CHECK(std::stod(rows[1][4]) >= 0.0);
}

TEST_CASE("sweep: grid errors") {
  CHECK(run({"sweep", "--regime", "degree", "--measure", "ccr"}).status == kExitInvalidArguments);
  CHECK(run({"sweep", "--regime", "degree", "--measure", "ccr", "--n-grid", "10:5"}).status == kExitInvalidArguments);
  CHECK(run({"sweep", "--regime", "degree", "--measure", "ccr", "--n-grid", "10:100:1"}).status ==
        kExitInvalidArguments);
  CHECK(run({"sweep", "--regime", "degree", "--measure", "fisher", "-a", "0.5", "-b", "0.5", "--n-grid",
             "10:20:2"})
            .status == kExitUnsupportedClass);
}

TEST_CASE("geometric grids") {
  CHECK(geometric_grid("25:100:2", true) == std::vector<double>{25.0, 50.0, 100.0});
  CHECK(geometric_grid("1:10:1.5", true) == std::vector<double>{1.0, 2.0, 3.0, 5.0, 8.0});
  CHECK(geometric_grid("200:800:2", false) == std::vector<double>{200.0, 400.0, 800.0});
}

TEST_CASE("budget exhaustion exits with 4") {
  ::setenv("JCX_MAX_EVALS", "100", 1);
  const Run r = run({"measure", "-n", "20", "-a", "2", "-b", "3"});
  ::unsetenv("JCX_MAX_EVALS");
  CHECK(r.status == kExitNumericalBudget);
  CHECK(!r.err.empty());

  ::setenv("JCX_MAX_EVALS", "lots", 1);
  CHECK(run({"measure", "-n", "1"}).status == kExitInvalidArguments);
  ::unsetenv("JCX_MAX_EVALS");
}

TEST_CASE("lmc-compare rows") {
  const Run r = run({"lmc-compare", "--lambda-grid", "3:4:1.3333333333333333", "--betas", "1,2"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == std::vector<std::string>{"lambda", "beta", "mapping", "alpha", "c_lmc_jacobi", "c_lmc_gegenbauer"});
  bool saw_11 = false, saw_22 = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 6);
    const double a = std::stod(rows[i][3]);
    const double b = std::stod(rows[i][1]);
    if (rows[i][2] == "alpha=lambda-2" && a == b) {
      CHECK(rows[i][4] == rows[i][5]);
    }
    if (a == 1.0 && b == 1.0) {
      saw_11 = true;
      CHECK(std::stod(rows[i][4]) == doctest::Approx(3.0 / (pi * e)).epsilon(1e-14));
    }
    if (a == 2.0 && b == 2.0) {
      saw_22 = true;
      CHECK(std::stod(rows[i][4]) == doctest::Approx(2.0 / (pi * e)).epsilon(1e-14));
    }
  }
  CHECK(saw_11);
  CHECK(saw_22);
}

TEST_CASE("lmc-compare: default betas and both mappings") {
  const Run r = run({"lmc-compare", "--lambda-grid", "3:3:2"});
  REQUIRE(r.status == kExitOk);
  const auto rows = csv_rows(r.out);
  // betas {lambda - 2, 2, 4, 8} under two mappings
  CHECK(rows.size() == 1 + 8);
  CHECK(run({"lmc-compare", "--lambda-grid", "0.5:3:2"}).status == kExitInvalidArguments);
}

TEST_CASE("rule: CSV dump") {
  const auto one = csv_rows(run({"rule", "-a", "0", "-b", "0", "-m", "1"}).out);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == std::vector<std::string>{"index", "node", "weight"});
  CHECK(one[1] == std::vector<std::string>{"0", "0", "2"});

  const auto two = csv_rows(run({"rule", "-m", "2"}).out);
  CHECK(std::stod(two[1][1]) == doctest::Approx(-0.5773502691896258).epsilon(1e-15));
  CHECK(std::stod(two[2][1]) == doctest::Approx(0.5773502691896258).epsilon(1e-15));

  const auto four = csv_rows(run({"rule", "-a", "2", "-b", "3", "-m", "4"}).out);
  REQUIRE(four.size() == 5);
  double total = 0.0;
  for (std::size_t i = 1; i < four.size(); ++i) total += std::stod(four[i][2]);
  CHECK(total == doctest::Approx(16.0 / 15.0).epsilon(1e-14));

  CHECK(run({"rule", "-m", "0"}).status == kExitInvalidArguments);
  CHECK(run({"rule", "-m", "5000"}).status == kExitInvalidArguments);
}

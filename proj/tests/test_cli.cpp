#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary through the shell; env is an optional
// VAR=value prefix. stdout/stderr go through scratch files in the test's
// working directory.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("MFOLD_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "MFOLD_CLI_BIN must point at the CLI binary");

  static int counter = 0;
  const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".tmp";
  const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".tmp";
  ++counter;

  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += "\"" + std::string(bin) + "\" " + args + " >" + out_path + " 2>" + err_path;

  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("bounds --no-such-flag 1 --alpha 1").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("bounds --help").exit_code == 0);
}

TEST_CASE("bounds at a hand-checked point prints the known values") {
  const CliResult r = run_cli("bounds --tau 1 --lambda 1 --gamma 0 --delta 0 --m 1 --alpha 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("bound_am1") != std::string::npos);
  CHECK(r.out.find("0.816496580927726") != std::string::npos);  // sqrt(2/3)
  CHECK(r.out.find("1.3333333333333333") != std::string::npos);  // 4/3
  CHECK(count_lines(r.out) == 2);  // header + one row
}

TEST_CASE("bounds grid rows multiply out and json carries the same values") {
  const CliResult csv = run_cli("bounds --beta 0:0.8:5 --lambda 0:1:2 --m 1:2:2");
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.out) == 1 + 5 * 2 * 2);

  const CliResult js = run_cli("bounds --beta 0 --lambda 1 --gamma 0 --delta 0 --m 1 --format json");
  CHECK(js.exit_code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc.at("meta").at("command") == "bounds");
  REQUIRE(doc.at("rows").size() == 1);
  const auto& row = doc.at("rows").at(0);
  CHECK(row.at("active_branch") == "sqrt");
  CHECK(std::abs(row.at("bound_am1").get<double>() - std::sqrt(2.0 / 3.0)) < 1e-15);
  CHECK(std::abs(row.at("bound_a2m1").get<double>() - 2.0 / 3.0) < 1e-15);
}

TEST_CASE("csv and json carry identical numeric values") {
  const std::string flags = "bounds --tau 0.8+0.4i --lambda 1.3 --gamma 0.6 --delta 2 --m 2 --beta 0.35";
  const CliResult csv = run_cli(flags);
  const CliResult js = run_cli(flags + " --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);

  // Map header names to the single data row.
  std::istringstream lines(csv.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::vector<std::string> names, cells;
  for (std::istringstream h(header); std::getline(h, names.emplace_back(), ',');) {
  }
  names.pop_back();
  for (std::istringstream c(row); std::getline(c, cells.emplace_back(), ',');) {
  }
  cells.pop_back();
  REQUIRE(names.size() == cells.size());

  const auto doc = nlohmann::json::parse(js.out);
  const auto& jrow = doc.at("rows").at(0);
  for (const char* col : {"bound_am1", "bound_a2m1", "branch_linear", "branch_sqrt", "alt_a2m1"}) {
    std::size_t idx = 0;
    while (idx < names.size() && names[idx] != col) ++idx;
    REQUIRE_MESSAGE(idx < names.size(), col);
    CHECK(std::stod(cells[idx]) == jrow.at(col).get<double>());
  }
}

TEST_CASE("bounds rejects malformed requests") {
  CHECK(run_cli("bounds --alpha 0.5 --beta 0.5").exit_code == 2);
  CHECK(run_cli("bounds --lambda 1").exit_code == 2);  // neither alpha nor beta
  CHECK(run_cli("bounds --alpha 0:1:0").exit_code == 2);
  CHECK(run_cli("bounds --alpha 1 --tau 1+2i3").exit_code == 2);
  CHECK(run_cli("bounds --alpha 1 --tau abc").exit_code == 2);
  CHECK(run_cli("bounds --alpha 1 --m 1.5").exit_code == 2);
  CHECK(run_cli("bounds --alpha 2").exit_code == 2);  // out of (0,1]
}

TEST_CASE("verify runs every suite and honors the fault hook") {
  const std::string fast =
      "--points-inversion 20 --points-functional 20 --points-bridge 20 --points-reduction 5";
  const CliResult ok = run_cli("verify " + fast);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all suites passed") != std::string::npos);
  for (const char* suite : {"operator-weights", "operator-embedding", "inverse-closed-form",
                            "functional-closed-form", "bound-bridge", "reduction-matrix"}) {
    CHECK_MESSAGE(ok.out.find(suite) != std::string::npos, suite);
  }
  CHECK(ok.out.find("FAIL") == std::string::npos);

  const CliResult bad = run_cli("verify " + fast + " --inject-fault");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("probe is deterministic and certifies both classes") {
  const std::string args =
      "probe --tau 1+0.5i --lambda 0.5 --gamma 0.5 --delta 1 --m 2 --alpha 0.9 -n 400 --seed 9";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("ratio_am1") != std::string::npos);

  const CliResult theta =
      run_cli("probe --beta 0.3 --lambda 1 --gamma 0.5 --delta 0 --m 3 --strategy grid -n 100000");
  CHECK(theta.exit_code == 0);
  CHECK(theta.out.find("ratio_am1_linear_route") != std::string::npos);
  CHECK(theta.out.find("route_residual_max") != std::string::npos);
}

TEST_CASE("probe usage guards") {
  CHECK(run_cli("probe --alpha 1 -n 0").exit_code == 2);
  CHECK(run_cli("probe --alpha 1 --strategy sometimes").exit_code == 2);
  CHECK(run_cli("probe --alpha 1 --beta 0").exit_code == 2);
  CHECK(run_cli("probe -n 10").exit_code == 2);
}

TEST_CASE("membership reports margins for the identity map") {
  const CliResult r = run_cli("membership --alpha 1");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 4);  // header + default radii {0.5, 0.9, 0.99}
  CHECK(r.out.find("1.5707963267948966") != std::string::npos);  // pi/2

  // Negative margins are a finding, not a failure.
  const CliResult neg = run_cli("membership --beta 0.5 --a=-0.9 --r 0.9 --format json");
  CHECK(neg.exit_code == 0);
  const auto doc = nlohmann::json::parse(neg.out);
  CHECK(doc.at("meta").at("forward_margin").get<double>() < 0.0);

  CHECK(run_cli("membership --alpha 1 --a 1+2i3").exit_code == 2);
  CHECK(run_cli("membership --alpha 1 --r 1.5").exit_code == 2);
}

TEST_CASE("exemplars emits the catalog with the pairing audit") {
  const CliResult r = run_cli("exemplars");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.at("pairs").size() == 9);
  for (const auto& pair : doc.at("pairs")) {
    CHECK(pair.at("composition_residual").get<double>() <= 1e-10);
    CHECK(pair.at("pairing_verified").get<bool>());
  }
  REQUIRE(doc.at("audit_1fold").size() == 3);
  CHECK(doc.at("audit_1fold").at(0).at("best_inverse") == "w/(1+w)");
  CHECK(doc.at("audit_1fold").at(1).at("best_inverse") == "(e^w-1)/e^w");

  CHECK(run_cli("exemplars --index 2").exit_code == 2);
  CHECK(run_cli("exemplars --m 0").exit_code == 2);
}

TEST_CASE("reduce checks all nine specializations") {
  const CliResult r = run_cli("reduce --points 20");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 10);  // header + nine rows
  CHECK(r.out.find("theorem1") != std::string::npos);
  CHECK(r.out.find("theorem2") != std::string::npos);
  CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("relative output paths resolve under MFOLD_OUT_DIR") {
  namespace fs = std::filesystem;
  const std::string dir = "cli_outdir_test";
  fs::create_directory(dir);

  const std::string args = "probe --alpha 0.8 --m 2 -n 50 --seed 4";
  const CliResult direct = run_cli(args);
  CHECK(direct.exit_code == 0);

  const CliResult filed = run_cli(args + " --out rel.csv", "MFOLD_OUT_DIR=" + dir);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(dir + "/rel.csv") == direct.out);

  fs::remove_all(dir);
}

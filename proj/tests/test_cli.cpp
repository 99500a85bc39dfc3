#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "graphene_cp/lifshitz.hpp"
#include "json.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string tmp_path(const std::string& stem) {
  static int counter = 0;
  return std::string(TEST_TMP_DIR) + "/" + stem + "_" +
         std::to_string(getpid()) + "_" + std::to_string(counter++);
}

RunResult run_cli(const std::string& args) {
  const std::string base = tmp_path("cli");
  const std::string cmd = std::string("\"") + CLI_BINARY_PATH + "\" " + args +
                          " >" + base + ".out 2>" + base + ".err";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  return r;
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

// header + single row CSV -> (column, value) pairs
std::vector<std::pair<std::string, std::string>> parse_row(
    const std::string& csv) {
  const auto lines = split(csv, "\r\n");
  REQUIRE(lines.size() >= 2);
  const auto names = split(lines[0], ",");
  const auto vals = split(lines[1], ",");
  REQUIRE(names.size() == vals.size());
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 0; i < names.size(); ++i) out.emplace_back(names[i], vals[i]);
  return out;
}

std::string field(const std::vector<std::pair<std::string, std::string>>& row,
                  const std::string& name) {
  for (const auto& [k, v] : row)
    if (k == name) return v;
  FAIL("no column ", name);
  return "";
}

bool has_field(const std::vector<std::pair<std::string, std::string>>& row,
               const std::string& name) {
  for (const auto& [k, v] : row)
    if (k == name) return true;
  return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and version") {
  const RunResult help = run_cli("--help");
  CHECK(help.status == 0);
  CHECK(help.out.find("force") != std::string::npos);
  CHECK(help.out.find("scan-delta-f0") != std::string::npos);

  const RunResult ver = run_cli("--version");
  CHECK(ver.status == 0);
  CHECK(ver.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("zero frequency row matches the library") {
  const RunResult r = run_cli("f0 --sep-um 5 --gap-ev 0.2 --mu-ev 0.075");
  REQUIRE(r.status == 0);
  const auto row = parse_row(r.out);
  CHECK(field(row, "command") == "f0");
  CHECK(field(row, "sep_um") == "5");
  CHECK(field(row, "terms_used") == "1");
  CHECK_FALSE(has_field(row, "absolute_force_ev_per_um"));

  gcp::QuadratureConfig q;
  const gcp::ForceResult lib = gcp::force_zero_term(
      gcp::GrapheneSheet(0.2, 0.075), gcp::Geometry(5.0, 300.0), std::nullopt,
      q);
  const double printed = std::strtod(field(row, "reduced_force").c_str(), nullptr);
  CHECK(printed == doctest::Approx(lib.reduced_force).epsilon(1e-11));
}

TEST_CASE("polarizability flag adds the absolute force column") {
  const RunResult r =
      run_cli("force --sep-um 4 --gap-ev 0.1 --alpha0-um3 7.5");
  REQUIRE(r.status == 0);
  const auto row = parse_row(r.out);
  REQUIRE(has_field(row, "absolute_force_ev_per_um"));
  const double phi = std::strtod(field(row, "reduced_force").c_str(), nullptr);
  const double abs = std::strtod(
      field(row, "absolute_force_ev_per_um").c_str(), nullptr);
  const double kT = gcp::constants().boltzmann * 300.0;
  CHECK(abs == doctest::Approx(-kT * 7.5 * phi / (8.0 * 256.0)).epsilon(1e-10));

  gcp::QuadratureConfig q;
  const gcp::ForceResult lib = gcp::force_total(
      gcp::GrapheneSheet(0.1, 0.0), gcp::Geometry(4.0, 300.0), std::nullopt, q);
  CHECK(phi == doctest::Approx(lib.reduced_force).epsilon(1e-11));
}

TEST_CASE("ideal metal row") {
  const RunResult r = run_cli("ideal --sep-um 3 --alpha0-um3 7.5");
  REQUIRE(r.status == 0);
  const auto row = parse_row(r.out);
  CHECK(field(row, "reduced_force") == "6");
  const double abs = std::strtod(
      field(row, "absolute_force_ev_per_um").c_str(), nullptr);
  const double expect = gcp::force_ideal_metal(
      gcp::Geometry(3.0, 300.0), gcp::PolarizabilityModel::static_model(7.5));
  CHECK(abs == doctest::Approx(expect).epsilon(1e-11));
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run_cli("force --gap-ev 0.1").status == 2);        // no separation
  CHECK(run_cli("force --sep-um 2 --bogus 1").status == 2);
  CHECK(run_cli("f0 --sep-um 2 --format yaml").status == 2);
  CHECK(run_cli("").status == 2);                          // subcommand needed
  const RunResult r = run_cli("force --gap-ev 0.1");
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("an exhausted frequency budget exits with 3 and reports its state") {
  const RunResult r =
      run_cli("force --sep-um 0.35 --gap-ev 0.05 --matsubara-max-l 1");
  CHECK(r.status == 3);
  CHECK(r.err.find("best estimate") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("closed form command reports regime and warns when it degrades") {
  const RunResult fine = run_cli("asym --sep-um 10 --gap-ev 0.2 --mu-ev 0.075");
  REQUIRE(fine.status == 0);
  const auto row = parse_row(fine.out);
  CHECK(field(row, "regime") == "large_gap");
  CHECK(field(row, "marginal") == "false");
  CHECK(fine.err.empty());

  const RunResult warn = run_cli("asym --sep-um 0.05 --gap-ev 0.1");
  CHECK(warn.status == 0);
  CHECK(warn.err.find("thermal parameter") != std::string::npos);

  const RunResult gone = run_cli("asym --sep-um 0.001 --gap-ev 0.1");
  CHECK(gone.status == 3);
  CHECK(gone.err.find("thermal parameter") != std::string::npos);
}

TEST_CASE("json rows are stable and machine readable") {
  const std::string args = "f0 --sep-um 5 --gap-ev 0.2 --format json";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc["command"] == "f0");
  CHECK(doc["sep_um"] == 5.0);
  CHECK(doc["gap_ev"] == 0.2);
  CHECK(doc["reduced_force"].is_number());
}

TEST_CASE("config file fills gaps but flags win") {
  const std::string cfg = tmp_path("opts") + ".ini";
  {
    std::ofstream f(cfg);
    f << "[f0]\n"
      << "sep-um=5\n"
      << "gap-ev=0.2\n";
  }
  const RunResult from_cfg = run_cli("f0 --config " + cfg);
  REQUIRE(from_cfg.status == 0);
  CHECK(field(parse_row(from_cfg.out), "sep_um") == "5");

  const RunResult overridden = run_cli("f0 --config " + cfg + " --sep-um 7");
  REQUIRE(overridden.status == 0);
  const RunResult direct = run_cli("f0 --sep-um 7 --gap-ev 0.2");
  REQUIRE(direct.status == 0);
  CHECK(overridden.out == direct.out);
}

TEST_CASE("scan output is byte stable across runs") {
  const std::string f1 = tmp_path("scan") + ".csv";
  const std::string f2 = tmp_path("scan") + ".csv";
  const std::string args =
      "scan-delta-f0 --gap-ev 0.2 --mu-ev 0 --a-min-um 3 --a-max-um 6 "
      "--points 3 --out ";
  const RunResult r1 = run_cli(args + f1);
  const RunResult r2 = run_cli(args + f2);
  REQUIRE(r1.status == 0);
  REQUIRE(r2.status == 0);
  const std::string c1 = slurp(f1);
  const std::string c2 = slurp(f2);
  CHECK(!c1.empty());
  CHECK(c1 == c2);
  CHECK(c1.rfind("separation_um", 0) == 0);
  CHECK(r1.err.find("crossing 1%") != std::string::npos);
  CHECK(r1.out.empty());  // table went to the file
}

TEST_CASE("scan json bundles table and crossings") {
  const RunResult r = run_cli(
      "scan-ratio --gap-ev 0.2 --mu-ev 0 --a-min-um 3 --a-max-um 6 "
      "--points 3 --format json");
  REQUIRE(r.status == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.contains("table"));
  CHECK(doc.contains("crossings_1pct"));
  CHECK(doc.contains("crossings_2pct"));
  CHECK(doc["table"]["abscissa"].size() == 3);
  CHECK(doc["crossings_1pct"].size() == 1);
}

TEST_CASE("dominance search through the command line") {
  const RunResult r = run_cli("a0 --gap-ev 0.05 --tol-um 0.02");
  REQUIRE(r.status == 0);
  const auto row = parse_row(r.out);
  const double a0 = std::strtod(field(row, "a0_um").c_str(), nullptr);
  CHECK(a0 == doctest::Approx(2.7181).epsilon(0.02));
  const double share = std::strtod(field(row, "ratio_at_a0").c_str(), nullptr);
  CHECK(share >= 0.99);
}

}

// End-to-end exercises of the ubv command-line tool.  The binary path
// arrives via the UBV_BIN environment variable (set by CTest); each case
// spawns the real executable and checks output text and exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "ubv/report_io.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("UBV_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string("\"") + bin + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints all five functions with exact values") {
  RunResult r = run_cli("eval 12");
  CHECK(r.code == 0);
  CHECK(has(r.out, "n = 12 = 2^2 * 3"));
  CHECK(has(r.out, "sigma(n) = 28"));
  CHECK(has(r.out, "sigma*(n) = 20"));
  CHECK(has(r.out, "sigma_exp(n) = 18"));
  CHECK(has(r.out, "d(n) = 6"));
  CHECK(has(r.out, "d_exp(n) = 2"));
  CHECK_FALSE(has(r.out, "note: sigma*(n) = sigma_exp(n)"));
}

TEST_CASE("eval marks ratios undefined below 3") {
  RunResult r = run_cli("eval 1");
  CHECK(r.code == 0);
  CHECK(has(r.out, "undefined (n < 3)"));
}

TEST_CASE("eval handles a 28-digit witness given as a factorization") {
  RunResult r = run_cli("eval \"2^49 * 4363953127297\"");
  CHECK(r.code == 0);
  CHECK(has(r.out, "n = 2456687209744634987008753664"));
  CHECK(has(r.out, "2456687209745202300915302274"));  // the common value
  CHECK(has(r.out, "note: sigma*(n) = sigma_exp(n)"));
}

TEST_CASE("eval json carries exact values and the equality flag") {
  RunResult r = run_cli("eval 20 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j.at("schema") == "ubv.eval/1");
  CHECK(j.at("n") == "20");
  CHECK(j.at("factorization") == "2^2 * 5");
  CHECK(j.at("values").at("sigma*") == "30");
  CHECK(j.at("values").at("sigma_exp") == "30");
  CHECK(j.at("sigma_star_equals_sigma_exp") == true);
  CHECK(j.at("ratios_vs_n_loglog_n").at("sigma*").contains("lo"));

  RunResult r2 = run_cli("eval 2 --format json");
  REQUIRE(r2.code == 0);
  auto j2 = nlohmann::ordered_json::parse(r2.out);
  CHECK(j2.at("ratios_vs_n_loglog_n").at("sigma").is_null());
}

TEST_CASE("scan json output parses back into an identical report") {
  RunResult r = run_cli("scan sigma-star 3 1000 1.3007 --format json");
  REQUIRE(r.code == 0);
  ubv::ScanReport rep = ubv::parse_scan_report(r.out);
  CHECK(rep.kind == "sigma-star");
  CHECK(rep.exceptions.size() == 34);
  CHECK(rep.exceptions.front().subject == 3);
  CHECK(rep.exceptions.back().subject == 690);
  ubv::ScanReport direct =
      ubv::scan_sigma_star_exceptions(3, 1000, ubv::parse_threshold("1.3007"));
  CHECK(ubv::canonical_equal(rep, direct));
}

TEST_CASE("scan human output names the exceptions") {
  RunResult r = run_cli("scan d-dexp 3 100 1.3007");
  CHECK(r.code == 0);
  CHECK(has(r.out, "d-dexp scan over [3, 100)"));
  CHECK(has(r.out, "3 exceptions"));
}

TEST_CASE("scan derbal rejects a threshold argument") {
  RunResult r = run_cli("scan derbal 3 1000 1.3007");
  CHECK(r.code == 2);
  CHECK(has(r.out, "usage error"));
  RunResult ok = run_cli("scan derbal 3 100");
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "derbal scan over [3, 100)"));
}

TEST_CASE("scan without required threshold is a usage error") {
  RunResult r = run_cli("scan sigma-star 3 1000");
  CHECK(r.code == 2);
  CHECK(has(r.out, "requires a threshold"));
}

TEST_CASE("unknown scan kind is a usage error") {
  RunResult r = run_cli("scan sigma-plus 3 1000 1.3007");
  CHECK(r.code == 2);
}

TEST_CASE("primorials sweep exits 1 when exceptions exist, 0 when clean") {
  RunResult bad = run_cli("primorials 2 7");
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "6 exceptions"));
  RunResult good = run_cli("primorials 8 1000");
  CHECK(good.code == 0);
  CHECK(has(good.out, "0 exceptions"));
  CHECK(has(good.out, "max ratio"));
  CHECK(has(good.out, "k = 8"));
}

TEST_CASE("checkpoint flag outside primorials is a usage error") {
  RunResult r = run_cli("--checkpoint /tmp/cp.txt scan sigma-star 3 100 1.3007");
  CHECK(r.code == 2);
  CHECK(has(r.out, "--checkpoint applies only to 'primorials'"));
}

TEST_CASE("density csv row carries the frozen count") {
  RunResult r = run_cli("density 1000 --format csv");
  CHECK(r.code == 0);
  CHECK(has(r.out, "hi,count,proportion,runtime_ms"));
  CHECK(has(r.out, "1000,776,0.776,"));
  RunResult bad = run_cli("density 999");
  CHECK(bad.code == 2);
}

TEST_CASE("equality csv lists the frozen witnesses") {
  RunResult r = run_cli("equality 1 10000 --format csv");
  CHECK(r.code == 0);
  CHECK(has(r.out, "# witnesses=4"));
  CHECK(has(r.out, "n,factorization,common_value"));
  CHECK(has(r.out, "20,2^2 * 5,30"));
  CHECK(has(r.out, "45,3^2 * 5,60"));
  CHECK(has(r.out, "320,2^6 * 5,390"));
  CHECK(has(r.out, "6615,3^3 * 5 * 7^2,8400"));

  RunResult one = run_cli("equality 1 100 --include-one");
  CHECK(one.code == 0);
  CHECK(has(one.out, "witnesses in [1, 100): 3"));  // 1, 20, 45
}

TEST_CASE("bounds table is monotone decreasing in the ratio") {
  RunResult r = run_cli("bounds 15485863 1e9 5 --format csv");
  REQUIRE(r.code == 0);
  REQUIRE(has(r.out, "x,a1_lo,a1_hi,a2_lo,a2_hi,ratio_lo,ratio_hi"));
  // parse the ratio_hi column and require strict decrease
  std::vector<double> his;
  size_t pos = r.out.find('\n') + 1;
  while (pos < r.out.size()) {
    size_t end = r.out.find('\n', pos);
    if (end == std::string::npos) break;
    std::string line = r.out.substr(pos, end - pos);
    size_t last = line.rfind(',');
    REQUIRE(last != std::string::npos);
    his.push_back(ubv::detail::parse_double(line.substr(last + 1)));
    pos = end + 1;
  }
  REQUIRE(his.size() == 5);
  CHECK(his.front() < 1.3007);
  for (size_t i = 1; i < his.size(); ++i) CHECK(his[i] < his[i - 1]);

  RunResult bad = run_cli("bounds 1000 2000 4");
  CHECK(bad.code == 2);
}

TEST_CASE("bad factorization text and bad numbers are usage errors") {
  CHECK(run_cli("eval 4^2").code == 2);
  CHECK(run_cli("eval abc").code == 2);
  CHECK(run_cli("scan sigma-star 3.5 10 1.3").code == 2);
  CHECK(run_cli("nonsense-subcommand").code == 2);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("output flag writes the report to a file") {
  std::string path = "cli_out_test.json";
  RunResult r = run_cli("density 1000 --format json --output " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto j = nlohmann::ordered_json::parse(ubv::load_text(path));
  CHECK(j.at("count") == 776);
  std::remove(path.c_str());
}

TEST_CASE("help exits 0") {
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(has(r.out, "eval"));
  CHECK(has(r.out, "primorials"));
}

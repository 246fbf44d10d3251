#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/weighting.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace queens;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

// The binary path arrives through the QUEENS_CLI environment variable, set by
// the ctest definition.
std::string cli_path() {
  const char* path = std::getenv("QUEENS_CLI");
  REQUIRE_MESSAGE(path != nullptr, "QUEENS_CLI must point at the queens binary");
  return path;
}

CliResult run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/queens_cli_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("complete: Nauck board completes with exit 0") {
  const auto result = run_cli("complete --board b4,d5 --n 8");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("completed") != std::string::npos);
  CHECK(result.output.find("b4") != std::string::npos);
}

TEST_CASE("complete: n = 3 is proven incompletable with exit 2") {
  const auto result = run_cli("complete --n 3");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("incompletable (exhaustive)") != std::string::npos);
}

TEST_CASE("complete: pipeline run is deterministic under a fixed seed") {
  const std::string cmd = "complete --n 200 --strategy pipeline --seed 7 --format structured";
  const auto first = run_cli(cmd);
  const auto second = run_cli(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);  // byte identical
  // the emitted board is a valid full configuration
  const auto pos = first.output.rfind("{\"board\"");
  REQUIRE(pos != std::string::npos);
  const auto line_end = first.output.find('\n', pos);
  const std::string summary = first.output.substr(pos, line_end - pos);
  const auto board_pos = summary.find("{\"n\":200");
  REQUIRE(board_pos != std::string::npos);
  const PartialConfig board =
      parse_board_json(summary.substr(board_pos, summary.rfind("]]") + 2 - board_pos) + "}");
  CHECK(board.full());
}

TEST_CASE("complete: budget exhaustion reports inconclusive") {
  const auto result = run_cli("complete --n 30 --strategy exact --budget-nodes 3");
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("inconclusive") != std::string::npos);
}

TEST_CASE("count: Nauck has two completions") {
  const auto result = run_cli("count --board b4,d5 --n 8");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("2") != std::string::npos);
}

TEST_CASE("count: zero for n = 2 with exit 2") {
  const auto result = run_cli("count --n 2");
  CHECK(result.exit_code == 2);
}

TEST_CASE("count: refuses big boards without a cap") {
  const auto result = run_cli("count --n 13");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("ceiling") != std::string::npos);
}

TEST_CASE("certify: generates a verifying certificate for the n=12 construction") {
  const std::string board = temp_file("third12.json", to_board_json(third_construction(12)));
  const std::string cert = "/tmp/queens_cli_test_third12_cert.json";
  const auto result = run_cli("certify --file " + board + " --out " + cert);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("proves non-completability") != std::string::npos);

  const auto verify = run_cli("certify --verify " + cert);
  CHECK(verify.exit_code == 2);
  CHECK(verify.output.find("PASS") != std::string::npos);
}

TEST_CASE("certify: tampered certificates fail verification") {
  // build a valid certificate, then halve one weight
  const PartialConfig cfg = third_construction(12);
  std::ifstream in("/tmp/queens_cli_test_third12_cert.json");
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (doc.empty()) {
    const auto made =
        run_cli("certify --file " + temp_file("third12.json", to_board_json(cfg)) +
                " --out /tmp/queens_cli_test_third12_cert.json");
    REQUIRE(made.exit_code == 2);
    std::ifstream again("/tmp/queens_cli_test_third12_cert.json");
    doc.assign(std::istreambuf_iterator<char>(again), std::istreambuf_iterator<char>());
  }
  const auto pos = doc.find("\"1\",\"1\"");
  REQUIRE(pos != std::string::npos);
  doc.replace(pos, 7, "\"1\",\"2\"");
  const std::string tampered = temp_file("tampered_cert.json", doc);
  const auto verify = run_cli("certify --verify " + tampered);
  CHECK(verify.exit_code == 3);
  CHECK(verify.output.find("FAIL") != std::string::npos);
  CHECK(verify.output.find("(") != std::string::npos);  // names a violating square or value
}

TEST_CASE("certify: completable boards have no certificate") {
  const auto result = run_cli("certify --board b4,d5 --n 8");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("no certificate exists") != std::string::npos);
}

TEST_CASE("construct: third, near-diagonal, regularize, central") {
  const auto third = run_cli("construct third --n 12");
  CHECK(third.exit_code == 0);
  CHECK(third.output.find("4 queens") != std::string::npos);

  const auto near = run_cli("construct near-diagonal --n 7");
  CHECK(near.exit_code == 0);
  CHECK(near.output.find("b1,d2,f3,a4,c5,e6,g7") != std::string::npos);

  const auto wrong = run_cli("construct near-diagonal --n 8");
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.output.find("mod 6") != std::string::npos);

  const auto reg = run_cli("construct regularize --n 3");
  CHECK(reg.exit_code == 0);
  CHECK(reg.output.find("1/2") != std::string::npos);
  CHECK(reg.output.find("3/4") != std::string::npos);

  // far below the threshold: instance is emitted but the certificate is weak
  const auto central = run_cli("construct central --n 31");
  CHECK(central.exit_code == 0);
  CHECK(central.output.find("m = 7") != std::string::npos);

  const auto bogus = run_cli("construct pyramid --n 12");
  CHECK(bogus.exit_code == 1);
}

TEST_CASE("qc-scan: n = 4 has completion threshold zero") {
  const auto result = run_cli("qc-scan --n-min 2 --n-max 4");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("n=2: no configuration exists") != std::string::npos);
  CHECK(result.output.find("n=3: no configuration exists") != std::string::npos);
  CHECK(result.output.find("n=4: qc=0") != std::string::npos);
}

TEST_CASE("bench: lp suite reports zero duality gaps") {
  const auto result = run_cli("bench lp --n 4..5 --seeds 2 --format structured");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"all_gaps_zero\":true") != std::string::npos);

  const auto usage = run_cli("bench \"\" ");
  CHECK(usage.exit_code == 1);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("complete").exit_code == 1);                      // no board at all
  CHECK(run_cli("complete --board b4,d5").exit_code == 1);        // --board without --n
  CHECK(run_cli("complete --n 8 --strategy warp").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("complete --board zz9 --n 8").exit_code == 1);    // parse diagnostics
}

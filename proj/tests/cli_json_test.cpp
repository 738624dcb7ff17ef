// Round-trips the CLI's JSON output through the documented schema.
#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include "codisc/discrepancy.hpp"
#include "codisc/kernels.hpp"
#include "codisc/rational.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = std::string(CODISC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

}  // namespace

TEST_CASE("disc json") {
  json j = json::parse(run_cli("disc --code hamming:3 --format json"));
  CHECK(j["command"] == "disc");
  CHECK(j["n"] == 7);
  CHECK(j["N"] == 16);
  CHECK(j["discrepancy"]["exact"] == "35/32");
  CHECK(codisc::parse_rational(j["discrepancy"]["exact"].get<std::string>()) ==
        codisc::ratio(35, 32));
  REQUIRE(j["distance_distribution"].size() == 8);
  CHECK(j["distance_distribution"][3] == "7");
  CHECK(j["dual_distribution"][4] == "7");
}

TEST_CASE("bound json") {
  json j = json::parse(run_cli("bound 7 16 --format json"));
  CHECK(j["command"] == "bound");
  CHECK(j["lp"]["energy"] == "1484");
  CHECK(j["lp"]["discrepancy_bound"]["exact"] == "35/32");
  CHECK(j["hamming_type"]["feasible"] == true);
  CHECK(j["constant"]["energy_bound"] == "2100");  // 15 * lambda(7)
}

TEST_CASE("random json is seed-deterministic") {
  std::string a = run_cli("random 6 8 --trials 50 --seed 3 --format json");
  std::string b = run_cli("random 6 8 --trials 50 --seed 3 --format json");
  CHECK(a == b);
  json j = json::parse(a);
  CHECK(j["trials"] == 50);
  CHECK(j["expected"]["exact"] ==
        codisc::to_string(codisc::lambda_average(6) / 8));
}

TEST_CASE("verify json") {
  json j = json::parse(run_cli("verify 5 --format json"));
  CHECK(j["failures"].empty());
  CHECK(j["checks"].get<long>() > 100);
}

TEST_CASE("space json") {
  json j = json::parse(run_cli(std::string("space ") + CODISC_DATA_DIR +
                               "/c6.space --subset 0,3 --format json"));
  CHECK(j["formulas_agree"] == true);
  CHECK(j["general"]["exact"] == "2/3");
  CHECK(j["scheme"]["exact"] == "2/3");
}

TEST_CASE("exit codes") {
  int code = 0;
  run_cli("disc --code hamming:3", &code);
  CHECK(code == 0);
  run_cli("disc --code mystery:9", &code);
  CHECK(code == 1);  // validation
  run_cli("disc --code random:25:4:1 --brute", &code);
  CHECK(code == 3);  // oracle limit
  run_cli("disc --code random:25:4:1 --brute --oracle-limit 25", &code);
  CHECK(code == 0);
  run_cli("verify 3", &code);
  CHECK(code == 0);
  run_cli("space missing_file.space --subset 0", &code);
  CHECK(code == 1);
  run_cli("bound 6 4 --two-term", &code);
  CHECK(code == 1);  // parity precondition
  run_cli("bound 6 4 --hamming-type", &code);
  CHECK(code == 1);
  run_cli("bound 6 4", &code);
  CHECK(code == 0);  // implicit mode skips inapplicable bounds
}

TEST_CASE("table json") {
  json j = json::parse(run_cli("table hamming --format json"));
  REQUIRE(j["rows"].size() == 7);
  CHECK(j["rows"][0]["m"] == 4);
  CHECK(j["rows"][0]["hamming_D"] == "1.571");
  CHECK(j["rows"][3]["hamming_D"] == "4.50471");
  CHECK(j["rows"][6]["hadamard_scaled_ED"] == "0.009");
}

TEST_CASE("single-trial random run reports that code's exact value") {
  json j = json::parse(run_cli("random 5 3 --trials 1 --seed 9 --format json"));
  CHECK_FALSE(j.contains("mean_within_3se"));
  codisc::Rational direct = codisc::discrepancy_spectrum(
      codisc::distance_distribution(codisc::random_code(5, 3, 9)));
  CHECK(codisc::parse_rational(j["mean"]["exact"].get<std::string>()) == direct);
}

TEST_CASE("emitted certificate file parses") {
  std::string path = std::string(CODISC_BUILD_DIR) + "/cert_roundtrip.json";
  run_cli("bound 7 16 --hamming-type --emit-cert " + path);
  std::unique_ptr<FILE, int (*)(FILE*)> f(fopen(path.c_str(), "r"), fclose);
  REQUIRE(f);
  std::string content;
  std::array<char, 4096> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), f.get())) content.append(buf.data(), got);
  json j = json::parse(content);
  CHECK(j["n"] == 7);
  CHECK(j["feasible"] == true);
  REQUIRE(j["h"].size() == 8);
  CHECK(j["h"][4] == "0");
  CHECK(codisc::parse_rational(j["bound"].get<std::string>()) == codisc::Rational(1484));
}

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string command = std::string(CLOSEFACTOR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("factor subcommand contract") {
  CHECK(run_cli("factor 2773").out == "47 59\n");
  CHECK(run_cli("factor 2773").exit_code == 0);
  CHECK(run_cli("factor 0xAD5").out == "47 59\n");  // hex alias of 2773
  CHECK(run_cli("factor 1081").exit_code == 2);
  CHECK(run_cli("factor 9").out == "3 3\n");
  CHECK(run_cli("factor banana").exit_code == 64);
  CHECK(run_cli("factor").exit_code == 64);
  CHECK(run_cli("factor 1082").exit_code == 65);

  const auto json_run = run_cli("factor 2773 --json");
  CHECK(json_run.exit_code == 0);
  const auto parsed = nlohmann::json::parse(json_run.out);
  CHECK(parsed["modulus"] == "2773");
  CHECK(parsed["outcome"] == "factored");
  CHECK(parsed["factors"] == nlohmann::json({"47", "59"}));
  CHECK(parsed["n0"] == "53");
  CHECK(parsed["i"] == "6");

  const auto missed = run_cli("factor 1081 --json");
  CHECK(missed.exit_code == 2);
  const auto missed_json = nlohmann::json::parse(missed.out);
  CHECK(missed_json["outcome"] == "not_applicable");
  CHECK(missed_json["residual"] == "8");
}

TEST_CASE("audit subcommand contract") {
  const auto vulnerable = run_cli("audit 2773 --json");
  CHECK(vulnerable.exit_code == 0);
  auto parsed = nlohmann::json::parse(vulnerable.out);
  CHECK(parsed["verdict"] == "VULNERABLE_CLOSE_GAP");
  CHECK(parsed["factors"] == nlohmann::json({"47", "59"}));
  CHECK(parsed["elapsed_ms"].is_number_integer());

  const auto rescued = run_cli("audit 136793 --r-max 50 --json");
  CHECK(rescued.exit_code == 0);
  parsed = nlohmann::json::parse(rescued.out);
  CHECK(parsed["verdict"] == "VULNERABLE_WITH_MULTIPLIER");
  CHECK(parsed["r"] == "17");
  CHECK(parsed["factors"] == nlohmann::json({"89", "1537"}));

  const auto survived = run_cli("audit 1081 --r-max 1 --json");
  CHECK(survived.exit_code == 2);
  parsed = nlohmann::json::parse(survived.out);
  CHECK(parsed["verdict"] == "NOT_VULNERABLE_AT_TESTED_DEPTH");

  CHECK(run_cli("audit").exit_code == 64);
  CHECK(run_cli("audit 2773 --r-max 0").exit_code == 64);
  CHECK(run_cli("audit 1082").exit_code == 65);
}

TEST_CASE("audit batch keeps order and flags bad lines") {
  const std::string path = "/tmp/closefactor_test_batch.txt";
  {
    std::ofstream file(path);
    file << "2773\n1081\nbanana\n136793\n65\n";
  }
  const auto run = run_cli("audit --batch " + path + " --r-max 50 --json");
  CHECK(run.exit_code == 65);  // one bad line
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 5);
  CHECK(nlohmann::json::parse(lines[0])["modulus"] == "2773");
  CHECK(nlohmann::json::parse(lines[1])["modulus"] == "1081");
  CHECK(nlohmann::json::parse(lines[2])["error"].is_string());
  CHECK(nlohmann::json::parse(lines[3])["modulus"] == "136793");
  CHECK(nlohmann::json::parse(lines[4])["modulus"] == "65");

  {
    std::ofstream file(path);
    file << "2773\n9\n";
  }
  CHECK(run_cli("audit --batch " + path).exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("gen subcommand contract") {
  const auto special = run_cli("gen --mode special --alpha 1");
  CHECK(special.exit_code == 0);
  CHECK(special.out == "n=65 p=5 q=13 mode=special\n");

  const auto once = run_cli("gen --mode close --bits 64 --seed 7");
  const auto twice = run_cli("gen --mode close --bits 64 --seed 7");
  CHECK(once.exit_code == 0);
  CHECK(once.out == twice.out);

  const auto as_json = run_cli("gen --mode close --bits 64 --seed 7 --json");
  const auto parsed = nlohmann::json::parse(as_json.out);
  const std::string n = parsed["n"];
  CHECK(run_cli("factor " + n).exit_code == 0);

  const auto safe = run_cli("gen --mode safe --bits 64 --seed 7 --json");
  const std::string safe_n = nlohmann::json::parse(safe.out)["n"];
  CHECK(run_cli("factor " + safe_n).exit_code == 2);

  CHECK(run_cli("gen --mode special --alpha 0").exit_code == 64);
  CHECK(run_cli("gen --mode waffle --bits 64").exit_code == 64);
  CHECK(run_cli("gen --mode close --bits 8").exit_code == 64);
}

TEST_CASE("count-squares subcommand contract") {
  CHECK(run_cli("count-squares 2773 2809").out == "1\n");
  CHECK(run_cli("count-squares 5 5").out == "0\n");
  CHECK(run_cli("count-squares 0 100").out == "10\n");
  CHECK(run_cli("count-squares 100 0").exit_code == 64);
  CHECK(run_cli("count-squares 5").exit_code == 64);
}

TEST_CASE("bench subcommand emits stable csv") {
  const std::string args = "bench --bits 24 --gap-mults 0.5,1.0 --trials 3 --seed 5 --no-timing";
  const auto once = run_cli(args);
  const auto twice = run_cli(args);
  CHECK(once.exit_code == 0);
  CHECK(once.out == twice.out);
  const auto lines = lines_of(once.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "bit_size,gap_multiplier,trials,successes,success_fraction,median_us");
  CHECK(lines[1] == "24,0.5,3,3,1.0000,0");
  CHECK(lines[2] == "24,1.0,3,3,1.0000,0");

  CHECK(run_cli("bench --bits 24 --gap-mults 1.0 --trials 0").exit_code == 64);
}

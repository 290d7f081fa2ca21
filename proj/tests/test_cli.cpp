#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "hsq/necklace.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hsq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("witten command", "[cli]") {
  CHECK(run({"witten", "--family", "cylinder", "-m", "6", "-n", "14"}).out == "13\n");
  CHECK(run({"witten", "--family", "cylinder", "-m", "2", "-n", "4"}).out == "3\n");
  CHECK(run({"witten", "--family", "cylinder", "-m", "0", "-n", "9"}).out == "1\n");
  const auto json = nlohmann::json::parse(run({"witten", "-m", "4", "-n", "6", "--format", "json"}).out);
  CHECK(json["schema"] == 1);
  CHECK(json["value"] == 4);
  CHECK(run({"witten", "--family", "moebius", "-m", "2", "-n", "4"}).code == hsq::cli::kUsage);
  CHECK(run({"witten", "-m", "30", "-n", "30"}).code == hsq::cli::kResource);
  CHECK(run({"witten", "-m", "-1", "-n", "3"}).code == hsq::cli::kUsage);
  CHECK(run({}).code == hsq::cli::kUsage);
}

TEST_CASE("table1 command", "[cli]") {
  const auto csv = run({"table1", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto golden = slurp(std::string(HSQ_TEST_DATA_DIR) + "/table1.csv");
  // Same layout and every row but m = 6 identical to the printed table.
  std::istringstream a(csv.out), b(golden);
  std::string la, lb;
  int line = 0, differing = 0;
  while (std::getline(a, la) && std::getline(b, lb)) {
    if (la != lb) {
      ++differing;
      CHECK(line == 7);
    }
    ++line;
  }
  CHECK(line == 14);
  CHECK(differing == 1);

  CHECK(run({"table1", "--format", "csv", "--nmax", "1", "--mmax", "0"}).out == "m\n0\n");
  const auto json = nlohmann::json::parse(run({"table1", "--format", "json", "--mmax", "3", "--nmax", "4"}).out);
  CHECK(json["columns"] == nlohmann::json({2, 3, 4}));
  CHECK(json["rows"][3]["values"] == nlohmann::json({1, 1, -3}));
  CHECK(nlohmann::json::parse(json.dump()) == json);
  CHECK(run({"table1", "--format", "dot"}).code == hsq::cli::kUsage);
}

TEST_CASE("genfun command", "[cli]") {
  CHECK(run({"genfun", "-n", "6"}).out == "6: -(t^4+2t^3+2t+1) / Phi_1(t)Phi_3(t)Phi_4(t)\n");
  const auto odd = nlohmann::json::parse(run({"genfun", "-n", "7", "--format", "json"}).out);
  CHECK(odd["method"] == "recurrence-fit");
  CHECK(odd["factored"] == "-(1) / Phi_1(t)");
  CHECK(run({"genfun", "-n", "14"}).code == hsq::cli::kResource);
}

TEST_CASE("necklace command", "[cli]") {
  CHECK(run({"necklace", "-k", "2", "-n", "12", "cycles"}).out == "2^1 3^2 6^1\n");
  const auto dot = run({"necklace", "dot", "-k", "2", "-n", "12"}).out;
  const auto classes = hsq::enumerate_necklaces(2, 12).size();
  CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '>')) == classes);
  CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '[')) == classes);
  const auto list = nlohmann::json::parse(run({"necklace", "enumerate", "-k", "1", "-n", "6", "--format", "json"}).out);
  CHECK(list["classes"].size() == 3);
  CHECK(list["classes"][0]["n"] == 6);
  const auto verify = run({"necklace", "verify", "--nmax", "24"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("all 1 checks passed") != std::string::npos);
  CHECK(run({"necklace", "cycles", "-k", "1", "-n", "30"}).code == hsq::cli::kResource);
  CHECK(run({"necklace", "cycles", "-k", "1", "-n", "30", "--bound-n", "36"}).out == "27^1\n");
  CHECK(run({"necklace", "spin"}).code == hsq::cli::kUsage);
}

TEST_CASE("verify command", "[cli]") {
  const auto ids = run({"verify", "identities"});
  CHECK(ids.code == 0);
  CHECK(ids.out.find("all 10 checks passed") != std::string::npos);

  const auto conj = run({"verify", "conjectures", "--nmax", "10", "--format", "json"});
  CHECK(conj.code == 0);
  const auto report = nlohmann::json::parse(conj.out);
  CHECK(report["schema"] == 1);
  CHECK(report["passed"] == true);
  bool saw_period = false;
  for (const auto& c : report["checks"]) {
    if (c["name"] == "n=10 zero multiplicities") saw_period = c["detail"].get<std::string>().find("period 56") != std::string::npos;
  }
  CHECK(saw_period);

  CHECK(run({"verify", "correspondence"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == hsq::cli::kUsage);
  CHECK(run({"verify", "properties", "--seed", "7"}).out == run({"verify", "properties", "--seed", "7"}).out);
}

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef PYRENIC_CLI_PATH
#error "PYRENIC_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PYRENIC_CLI_PATH) + " " + args + " 2>/dev/null";
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

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("generate subcommand") {
  RunResult r = run_cli("generate --family pyrene_chain --n 1");
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["vertices"] == 16);
  CHECK(doc["edges"] == 19);
  CHECK(doc["bipartition"] == nlohmann::json::array({8, 8}));

  RunResult csv = run_cli("generate --family auxiliary --n 1 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("vertices,edges,faces,class0,class1,cells", 0) == 0);
  CHECK(csv.out.find("14,16,3,7,7,") != std::string::npos);

  RunResult named = run_cli("generate --system '{\"named\":\"diphenyl\"}'");
  REQUIRE(named.code == 0);
  CHECK(parse_json(named.out)["vertices"] == 12);
}

TEST_CASE("system input comes from a file when not inline") {
  const char* path = "cli_test_system.json";
  {
    std::ofstream f(path);
    f << "{\"cells\":[[0,0],[1,0],[0,1],[1,-1]]}";
  }
  RunResult r = run_cli(std::string("generate --system ") + path);
  std::remove(path);
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out)["vertices"] == 16);

  CHECK(run_cli("generate --system definitely_missing.json").code == 2);
  CHECK(run_cli("generate").code == 2);  // no system at all
}

TEST_CASE("polynomial subcommand routes") {
  RunResult rec = run_cli(
      "polynomial --family pyrene_chain --n 2 --kind forcing --method recurrence");
  REQUIRE(rec.code == 0);
  auto doc = parse_json(rec.out);
  CHECK(doc["polynomial"] == nlohmann::json::array({"0", "0", "3", "16", "16"}));
  CHECK(doc["min"] == 2);
  CHECK(doc["max"] == 4);
  CHECK(doc["phi"] == "35");
  CHECK(doc["idf"] == "118");

  RunResult closed = run_cli(
      "polynomial --family pyrene_chain --n 3 --kind antiforcing --method closed");
  RunResult rec3 = run_cli(
      "polynomial --family pyrene_chain --n 3 --kind antiforcing --method recurrence");
  REQUIRE(closed.code == 0);
  REQUIRE(rec3.code == 0);
  auto cdoc = parse_json(closed.out);
  auto rdoc = parse_json(rec3.out);
  CHECK(cdoc["polynomial"] == rdoc["polynomial"]);
  CHECK(cdoc["af"] == rdoc["af"]);
  CHECK(cdoc["method"] == "closed");

  RunResult brute = run_cli(
      "polynomial --family pyrene_chain --n 1 --kind forcing --method brute --format csv");
  REQUIRE(brute.code == 0);
  CHECK(brute.out == "value,count\n1,2\n2,4\n");
}

TEST_CASE("spectrum subcommand") {
  RunResult r = run_cli(
      "spectrum --family pyrene_chain --n 1 --kind forcing --method oracle --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out == "value,count\n1,2\n2,4\n");

  RunResult j = run_cli("spectrum --family pyrene_chain --n 2 --kind antiforcing "
                        "--method recurrence");
  REQUIRE(j.code == 0);
  auto doc = parse_json(j.out);
  CHECK(doc["min"] == 2);
  CHECK(doc["max"] == 6);
  CHECK(doc["contiguous"] == true);
}

TEST_CASE("matchings subcommand") {
  RunResult r = run_cli(
      "matchings --family pyrene_chain --n 1 --kind forcing --method oracle");
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["count"] == 6);
  std::vector<int> values = doc["values"].get<std::vector<int>>();
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<int>{1, 1, 2, 2, 2, 2});

  RunResult csv = run_cli("matchings --family pyrene_chain --n 1 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("index,edges\n", 0) == 0);
}

TEST_CASE("sequence subcommand") {
  RunResult r = run_cli("sequence --name phi --route closed_form --max-n 6");
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["name"] == "phi");
  CHECK(doc["values"] ==
        nlohmann::json::array({"1", "6", "35", "204", "1189", "6930", "40391"}));

  RunResult alias = run_cli("sequence --name af_sum --route poly_derivative --max-n 2");
  REQUIRE(alias.code == 0);
  CHECK(parse_json(alias.out)["name"] == "af");

  RunResult csv = run_cli("sequence --name idf --max-n 2 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "n,route,value\n0,recurrence,0\n1,recurrence,10\n2,recurrence,118\n");

  CHECK(run_cli("sequence --route recurrence --max-n 2").code == 2);  // --name required
  CHECK(run_cli("sequence --name phi --route warp --max-n 2").code == 2);
  CHECK(run_cli("sequence --name phi --max-n 99").code == 3);  // beyond the arithmetic cap
}

TEST_CASE("validate subcommand") {
  RunResult ok = run_cli("validate --max-n 1");
  REQUIRE(ok.code == 0);
  auto doc = parse_json(ok.out);
  CHECK(doc["failed"] == 0);
  CHECK(doc["checks"].size() == 23);

  RunResult faulty = run_cli("validate --max-n 1 --inject-fault corrupt-forcing-seed");
  CHECK(faulty.code == 1);
  auto fdoc = parse_json(faulty.out);
  CHECK(fdoc["failed"] == 1);
  bool seen = false;
  for (const auto& c : fdoc["checks"])
    if (c["id"] == "forcing-recurrence-vs-closed") {
      CHECK(c["status"] == "fail");
      seen = true;
    }
  CHECK(seen);

  CHECK(run_cli("validate --max-n 1 --inject-fault nonsense").code == 2);

  RunResult csv = run_cli("validate --max-n 1 --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("id,status,detail\n", 0) == 0);
}

TEST_CASE("exit codes match the failure class") {
  // Unsupported method/system combination.
  CHECK(run_cli("polynomial --system '{\"cells\":[[0,0],[1,0],[2,0]]}' --kind forcing "
                "--method oracle").code == 3);
  // Work cap exceeded.
  CHECK(run_cli("polynomial --family pyrene_chain --n 6 --kind forcing --method brute")
            .code == 3);
  CHECK(run_cli("polynomial --family pyrene_chain --n 1 --kind forcing --method brute "
                "--caps '{\"brute_matchings\":2}'").code == 3);
  // No perfect matching.
  CHECK(run_cli("polynomial --system '{\"cells\":[[0,0],[1,0],[0,1]]}' --kind forcing "
                "--method brute").code == 3);
  // Parse failures.
  CHECK(run_cli("generate --system '{\"cells\":[[0,0],[9,9]]}'").code == 2);
  CHECK(run_cli("generate --system '{not json'").code == 2);
  CHECK(run_cli("polynomial --family pyrene_chain --n 1 --caps '{\"bogus\":1}'").code == 2);
  // Command-line misuse.
  CHECK(run_cli("polynomial --family pyrene_chain --n 1 --kind sideways").code == 2);
  CHECK(run_cli("no_such_command").code == 2);
  CHECK(run_cli("generate --family pyrene_chain --n 0").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("output lands in --out when given") {
  const char* path = "cli_test_outfile.json";
  RunResult r = run_cli(std::string("generate --family pyrene_chain --n 1 --out ") + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json doc;
  f >> doc;
  CHECK(doc["vertices"] == 16);
  std::remove(path);
}

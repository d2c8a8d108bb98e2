#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "core/report.hpp"
#include "core/validate.hpp"
#include "test_util.hpp"

using namespace pyrenic;
using pyrenic_test::code_of;

namespace {

ParsedInput input(const std::string& text) { return parse_input(text); }

const CheckResult* find_check(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const CheckResult& r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("token parsing") {
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(code_of([] { parse_format("xml"); }) == ErrorCode::invalid_parameter);
  CHECK(parse_kind("forcing") == Quantity::forcing);
  CHECK(parse_kind("antiforcing") == Quantity::antiforcing);
  CHECK(code_of([] { parse_kind("both"); }) == ErrorCode::invalid_parameter);
  CHECK(parse_method("brute") == ComputeMethod::brute);
  CHECK(parse_method("oracle") == ComputeMethod::oracle);
  CHECK(parse_method("recurrence") == ComputeMethod::recurrence);
  CHECK(parse_method("closed") == ComputeMethod::closed);
  CHECK(code_of([] { parse_method("magic"); }) == ErrorCode::invalid_parameter);
  CHECK(std::string(format_token(OutputFormat::csv)) == "csv");
  CHECK(std::string(kind_token(Quantity::antiforcing)) == "antiforcing");
  CHECK(std::string(method_token(ComputeMethod::closed)) == "closed");
}

TEST_CASE("csv field quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("") == "");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("caps JSON overrides") {
  RunCaps d = parse_caps_json("");
  CHECK(d.brute_matchings == 250);
  CHECK(d.antiforcing_matchings == 40);
  CHECK(d.antiforcing_width == 25);
  CHECK(d.oracle_max_n == 6);
  CHECK(d.arith_max_n == 40);

  RunCaps c = parse_caps_json(R"({"brute_matchings": 10, "oracle_max_n": 2})");
  CHECK(c.brute_matchings == 10);
  CHECK(c.oracle_max_n == 2);
  CHECK(c.antiforcing_width == 25);

  CHECK(code_of([] { parse_caps_json("[]"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_caps_json("{\"bogus\":1}"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_caps_json("{\"brute_matchings\":0}"); }) ==
        ErrorCode::invalid_parameter);
  CHECK(code_of([] { parse_caps_json("{\"brute_matchings\":-3}"); }) ==
        ErrorCode::invalid_parameter);
  CHECK(code_of([] { parse_caps_json("{\"brute_matchings\":\"many\"}"); }) ==
        ErrorCode::invalid_parameter);
  CHECK(code_of([] { parse_caps_json("not json"); }) == ErrorCode::parse_error);
}

TEST_CASE("method and system gating") {
  RunCaps caps;
  ParsedInput chain2 = input(R"({"family":"pyrene_chain","n":2})");
  ParsedInput named = input(R"({"named":"diphenyl"})");
  ParsedInput generic = input(R"({"cells":[[0,0],[1,0],[2,0]]})");

  require_oracle_eligible(chain2, caps);  // must not throw
  CHECK(require_chain_arith(chain2, caps) == 2);
  CHECK(code_of([&] { require_oracle_eligible(named, caps); }) == ErrorCode::unsupported_graph);
  CHECK(code_of([&] { require_oracle_eligible(generic, caps); }) ==
        ErrorCode::unsupported_graph);
  CHECK(code_of([&] { require_chain_arith(named, caps); }) == ErrorCode::unsupported_graph);

  ParsedInput aux = input(R"({"family":"auxiliary","n":1})");
  require_oracle_eligible(aux, caps);  // truncations keep the oracle
  CHECK(code_of([&] { require_chain_arith(aux, caps); }) == ErrorCode::unsupported_graph);

  RunCaps small;
  small.oracle_max_n = 1;
  small.arith_max_n = 1;
  CHECK(code_of([&] { require_oracle_eligible(chain2, small); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([&] { require_chain_arith(chain2, small); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("generate documents") {
  ParsedInput chain1 = input(R"({"family":"pyrene_chain","n":1})");
  auto doc = nlohmann::json::parse(render_generate(chain1, OutputFormat::json));
  CHECK(doc["vertices"] == 16);
  CHECK(doc["edges"] == 19);
  CHECK(doc["faces"] == 4);
  CHECK(doc["bipartition"] == nlohmann::json::array({8, 8}));
  CHECK(doc["cells"].size() == 4);

  ParsedInput named = input(R"({"named":"diphenyl"})");
  auto ndoc = nlohmann::json::parse(render_generate(named, OutputFormat::json));
  CHECK(ndoc["vertices"] == 12);
  CHECK_FALSE(ndoc.contains("cells"));

  std::string csv = render_generate(chain1, OutputFormat::csv);
  CHECK(csv.rfind("vertices,edges,faces,class0,class1,cells", 0) == 0);
  CHECK(csv.find("16,19,4,8,8,") != std::string::npos);
}

TEST_CASE("polynomial documents") {
  ParsedInput chain2 = input(R"({"family":"pyrene_chain","n":2})");
  RunCaps caps;
  auto doc = nlohmann::json::parse(
      render_polynomial(chain2, Quantity::forcing, ComputeMethod::recurrence,
                        OutputFormat::json, caps));
  CHECK(doc["kind"] == "forcing");
  CHECK(doc["method"] == "recurrence");
  CHECK(doc["polynomial"] == nlohmann::json::array({"0", "0", "3", "16", "16"}));
  CHECK(doc["min"] == 2);
  CHECK(doc["max"] == 4);
  CHECK(doc["phi"] == "35");
  CHECK(doc["idf"] == "118");
  CHECK_FALSE(doc.contains("af"));

  auto af_doc = nlohmann::json::parse(
      render_polynomial(chain2, Quantity::antiforcing, ComputeMethod::closed,
                        OutputFormat::json, caps));
  CHECK(af_doc["af"] == "142");
  CHECK(af_doc["min"] == 2);
  CHECK(af_doc["max"] == 6);

  // Brute and recurrence routes emit byte-identical polynomial documents.
  ParsedInput chain1 = input(R"({"family":"pyrene_chain","n":1})");
  std::string brute = render_polynomial(chain1, Quantity::forcing, ComputeMethod::brute,
                                        OutputFormat::json, caps);
  std::string rec = render_polynomial(chain1, Quantity::forcing, ComputeMethod::recurrence,
                                      OutputFormat::json, caps);
  CHECK(brute.substr(brute.find("\"polynomial\"")) == rec.substr(rec.find("\"polynomial\"")));

  std::string csv = render_polynomial(chain2, Quantity::forcing, ComputeMethod::recurrence,
                                      OutputFormat::csv, caps);
  CHECK(csv == "value,count\n2,3\n3,16\n4,16\n");

  // Oracle on a generic benzenoid is refused, brute is not.
  ParsedInput generic = input(R"({"cells":[[0,0],[1,0],[2,0]]})");
  CHECK(code_of([&] {
          render_polynomial(generic, Quantity::forcing, ComputeMethod::oracle,
                            OutputFormat::json, caps);
        }) == ErrorCode::unsupported_graph);
  auto gdoc = nlohmann::json::parse(render_polynomial(
      generic, Quantity::forcing, ComputeMethod::brute, OutputFormat::json, caps));
  CHECK(gdoc["phi"] == "4");  // linear three-ring chain: four matchings
}

TEST_CASE("spectrum documents") {
  ParsedInput chain2 = input(R"({"family":"pyrene_chain","n":2})");
  RunCaps caps;
  auto doc = nlohmann::json::parse(render_spectrum(
      chain2, Quantity::antiforcing, ComputeMethod::recurrence, OutputFormat::json, caps));
  CHECK(doc["min"] == 2);
  CHECK(doc["max"] == 6);
  CHECK(doc["contiguous"] == true);
  CHECK(doc["histogram"]["2"] == "3");
  CHECK(doc["histogram"]["6"] == "4");
  CHECK(render_spectrum(chain2, Quantity::antiforcing, ComputeMethod::recurrence,
                        OutputFormat::csv, caps) ==
        "value,count\n2,3\n3,8\n4,12\n5,8\n6,4\n");
}

TEST_CASE("matchings documents") {
  ParsedInput chain1 = input(R"({"family":"pyrene_chain","n":1})");
  RunCaps caps;
  auto doc = nlohmann::json::parse(render_matchings(
      chain1, Quantity::forcing, ComputeMethod::brute, OutputFormat::json, caps));
  CHECK(doc["count"] == 6);
  CHECK(doc["kind"] == "forcing");
  CHECK(doc["method"] == "brute");
  CHECK(doc["matchings"].size() == 6);
  CHECK(doc["matchings"][0].size() == 8);
  std::vector<int> values = doc["values"].get<std::vector<int>>();
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<int>{1, 1, 2, 2, 2, 2});

  auto bare = nlohmann::json::parse(render_matchings(
      chain1, std::nullopt, ComputeMethod::brute, OutputFormat::json, caps));
  CHECK_FALSE(bare.contains("values"));
  CHECK_FALSE(bare.contains("kind"));

  std::string csv = render_matchings(chain1, std::nullopt, ComputeMethod::brute,
                                     OutputFormat::csv, caps);
  CHECK(csv.rfind("index,edges\n", 0) == 0);

  RunCaps tiny;
  tiny.brute_matchings = 2;
  CHECK(code_of([&] {
          render_matchings(chain1, std::nullopt, ComputeMethod::brute, OutputFormat::json,
                           tiny);
        }) == ErrorCode::cap_exceeded);
  CHECK(code_of([&] {
          render_matchings(chain1, Quantity::forcing, ComputeMethod::recurrence,
                           OutputFormat::json, caps);
        }) == ErrorCode::unsupported_graph);
}

TEST_CASE("sequence documents") {
  RunCaps caps;
  auto doc = nlohmann::json::parse(
      render_sequence("phi", "closed_form", 6, OutputFormat::json, caps));
  CHECK(doc["name"] == "phi");
  CHECK(doc["route"] == "closed_form");
  CHECK(doc["max_n"] == 6);
  CHECK(doc["values"] ==
        nlohmann::json::array({"1", "6", "35", "204", "1189", "6930", "40391"}));

  CHECK(render_sequence("idf", "recurrence", 3, OutputFormat::csv, caps) ==
        "n,route,value\n0,recurrence,0\n1,recurrence,10\n2,recurrence,118\n"
        "3,recurrence,1036\n");

  CHECK(code_of([&] { render_sequence("phi", "recurrence", 99, OutputFormat::json, caps); }) ==
        ErrorCode::cap_exceeded);
  CHECK(code_of([&] { render_sequence("zeta", "recurrence", 3, OutputFormat::json, caps); }) ==
        ErrorCode::invalid_parameter);
}

TEST_CASE("consistency matrix passes under tight limits") {
  ValidateOptions opt;
  opt.max_n = 2;
  std::vector<CheckResult> rs = run_checks(opt);
  CHECK(rs.size() == 23);
  for (const CheckResult& r : rs) {
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.status != CheckStatus::fail);
  }
  const CheckResult* asym = find_check(rs, "asymptotic-idf-ratio");
  REQUIRE(asym != nullptr);
  CHECK(asym->status == CheckStatus::skip);  // needs max_n >= 40
  const CheckResult* seeds = find_check(rs, "seed-forcing-pyrene");
  REQUIRE(seeds != nullptr);
  CHECK(seeds->status == CheckStatus::pass);
}

TEST_CASE("consistency matrix: arithmetic-depth run with trimmed oracle sweeps") {
  ValidateOptions opt;
  opt.max_n = 40;
  opt.caps.oracle_max_n = 2;  // keep the per-matching sweeps small here
  std::vector<CheckResult> rs = run_checks(opt);
  for (const CheckResult& r : rs) {
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.status != CheckStatus::fail);
  }
  for (const char* id : {"asymptotic-idf-ratio", "asymptotic-af-ratio"}) {
    const CheckResult* r = find_check(rs, id);
    REQUIRE(r != nullptr);
    CHECK(r->status == CheckStatus::pass);
  }
}

TEST_CASE("fault injection is detected") {
  ValidateOptions opt;
  opt.max_n = 1;
  opt.inject_fault = "corrupt-forcing-seed";
  std::vector<CheckResult> rs = run_checks(opt);
  int failed = 0;
  for (const CheckResult& r : rs)
    if (r.status == CheckStatus::fail) {
      ++failed;
      CHECK(r.id == "forcing-recurrence-vs-closed");
      CHECK_FALSE(r.detail.empty());
    }
  CHECK(failed == 1);

  ValidateOptions bad;
  bad.inject_fault = "corrupt-everything";
  CHECK(code_of([&] { run_checks(bad); }) == ErrorCode::invalid_parameter);
  ValidateOptions neg;
  neg.max_n = -1;
  CHECK(code_of([&] { run_checks(neg); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("validation report rendering") {
  std::vector<CheckResult> rs{{"alpha", CheckStatus::pass, ""},
                              {"beta", CheckStatus::fail, "expected 1, got 2"},
                              {"gamma", CheckStatus::skip, "needs n >= 40"}};
  auto doc = nlohmann::json::parse(render_validate(rs, OutputFormat::json));
  CHECK(doc["passed"] == 1);
  CHECK(doc["failed"] == 1);
  CHECK(doc["skipped"] == 1);
  CHECK(doc["checks"].size() == 3);
  CHECK(doc["checks"][1]["id"] == "beta");
  CHECK(doc["checks"][1]["status"] == "fail");
  CHECK(doc["checks"][1]["detail"] == "expected 1, got 2");

  CHECK(render_validate(rs, OutputFormat::csv) ==
        "id,status,detail\nalpha,pass,\nbeta,fail,\"expected 1, got 2\"\n"
        "gamma,skip,needs n >= 40\n");

  CHECK(std::string(status_token(CheckStatus::pass)) == "pass");
  CHECK(std::string(status_token(CheckStatus::fail)) == "fail");
  CHECK(std::string(status_token(CheckStatus::skip)) == "skip");
}

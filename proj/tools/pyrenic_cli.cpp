#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pyrenic.h"

namespace {

int exit_code_for(pyrenic_status st) {
  switch (st) {
    case PYRENIC_OK:
      return 0;
    case PYRENIC_ERR_VALIDATION:
    case PYRENIC_ERR_INTERNAL:
      return 1;
    case PYRENIC_ERR_INVALID_PARAMETER:
    case PYRENIC_ERR_PARSE:
      return 2;
    case PYRENIC_ERR_UNSUPPORTED_GRAPH:
    case PYRENIC_ERR_NO_PERFECT_MATCHING:
    case PYRENIC_ERR_CAP_EXCEEDED:
      return 3;
  }
  return 1;
}

struct CommonArgs {
  std::string system;  // file path or inline JSON (leading '{')
  std::string family = "pyrene_chain";
  int n = 0;
  bool has_n = false;
  std::string kind;
  std::string method = "brute";
  std::string format = "json";
  std::string out_path;
  std::string caps;  // inline JSON overriding work caps
  int max_n = 40;
  std::string fault;
};

void add_system_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--system", a.system, "system description: JSON file path or inline JSON");
  cmd->add_option("--family", a.family, "family for --n: pyrene_chain | auxiliary")
      ->check(CLI::IsMember({"pyrene_chain", "auxiliary"}));
  cmd->add_option("--n", a.n, "chain length when using --family")
      ->check(CLI::PositiveNumber)
      ->each([&a](const std::string&) { a.has_n = true; });
}

void add_output_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--format", a.format, "output format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", a.out_path, "write the document to this file instead of stdout");
  cmd->add_option("--caps", a.caps, "JSON object overriding work caps");
}

std::optional<std::string> resolve_system_json(const CommonArgs& a) {
  if (!a.system.empty()) {
    std::size_t i = a.system.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && a.system[i] == '{') return a.system;
    std::ifstream in(a.system, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read system file: " << a.system << "\n";
      return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (a.has_n)
    return "{\"family\":\"" + a.family + "\",\"n\":" + std::to_string(a.n) + "}";
  std::cerr << "error: no system given; pass --system or --family with --n\n";
  return std::nullopt;
}

bool write_document(const char* doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return false;
  out << doc;
  return static_cast<bool>(out);
}

int finish(pyrenic_status st, char* doc, const std::string& out_path) {
  if (doc) {
    bool ok = write_document(doc, out_path);
    pyrenic_string_free(doc);
    if (!ok) {
      std::cerr << "error: cannot write output to " << (out_path.empty() ? "stdout" : out_path)
                << "\n";
      return 2;
    }
  }
  if (st != PYRENIC_OK) std::cerr << "error: " << pyrenic_last_error() << "\n";
  return exit_code_for(st);
}

const char* opt_str(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact forcing / anti-forcing engine for pyrene-chain hexagonal systems"};
  app.require_subcommand(1);
  int rc = 0;

  CommonArgs gen;
  CLI::App* cmd_generate = app.add_subcommand("generate", "build a system and print its stats");
  add_system_flags(cmd_generate, gen);
  add_output_flags(cmd_generate, gen);
  cmd_generate->callback([&] {
    auto sys = resolve_system_json(gen);
    if (!sys) {
      rc = 2;
      return;
    }
    char* doc = nullptr;
    pyrenic_status st = pyrenic_render_generate(sys->c_str(), gen.format.c_str(), &doc);
    rc = finish(st, doc, gen.out_path);
  });

  CommonArgs mat;
  CLI::App* cmd_matchings =
      app.add_subcommand("matchings", "enumerate perfect matchings, optionally with values");
  add_system_flags(cmd_matchings, mat);
  add_output_flags(cmd_matchings, mat);
  cmd_matchings->add_option("--kind", mat.kind, "annotate each matching: forcing | antiforcing")
      ->check(CLI::IsMember({"forcing", "antiforcing"}));
  cmd_matchings->add_option("--method", mat.method, "brute | oracle")
      ->check(CLI::IsMember({"brute", "oracle"}));
  cmd_matchings->callback([&] {
    auto sys = resolve_system_json(mat);
    if (!sys) {
      rc = 2;
      return;
    }
    char* doc = nullptr;
    pyrenic_status st = pyrenic_render_matchings(sys->c_str(), opt_str(mat.kind),
                                                 mat.method.c_str(), mat.format.c_str(),
                                                 opt_str(mat.caps), &doc);
    rc = finish(st, doc, mat.out_path);
  });

  CommonArgs pol;
  CLI::App* cmd_polynomial =
      app.add_subcommand("polynomial", "forcing / anti-forcing polynomial of a system");
  add_system_flags(cmd_polynomial, pol);
  add_output_flags(cmd_polynomial, pol);
  pol.kind = "forcing";
  cmd_polynomial->add_option("--kind", pol.kind, "forcing | antiforcing")
      ->check(CLI::IsMember({"forcing", "antiforcing"}));
  cmd_polynomial->add_option("--method", pol.method, "brute | oracle | recurrence | closed")
      ->check(CLI::IsMember({"brute", "oracle", "recurrence", "closed"}));
  cmd_polynomial->callback([&] {
    auto sys = resolve_system_json(pol);
    if (!sys) {
      rc = 2;
      return;
    }
    char* doc = nullptr;
    pyrenic_status st =
        pyrenic_render_polynomial(sys->c_str(), pol.kind.c_str(), pol.method.c_str(),
                                  pol.format.c_str(), opt_str(pol.caps), &doc);
    rc = finish(st, doc, pol.out_path);
  });

  CommonArgs spe;
  CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "value histogram with interval flags");
  add_system_flags(cmd_spectrum, spe);
  add_output_flags(cmd_spectrum, spe);
  spe.kind = "forcing";
  cmd_spectrum->add_option("--kind", spe.kind, "forcing | antiforcing")
      ->check(CLI::IsMember({"forcing", "antiforcing"}));
  cmd_spectrum->add_option("--method", spe.method, "brute | oracle | recurrence | closed")
      ->check(CLI::IsMember({"brute", "oracle", "recurrence", "closed"}));
  cmd_spectrum->callback([&] {
    auto sys = resolve_system_json(spe);
    if (!sys) {
      rc = 2;
      return;
    }
    char* doc = nullptr;
    pyrenic_status st = pyrenic_render_spectrum(sys->c_str(), spe.kind.c_str(), spe.method.c_str(),
                                                spe.format.c_str(), opt_str(spe.caps), &doc);
    rc = finish(st, doc, spe.out_path);
  });

  CommonArgs seq;
  std::string seq_name;
  std::string seq_route = "recurrence";
  seq.max_n = 20;
  CLI::App* cmd_sequence =
      app.add_subcommand("sequence", "integer sequence table (phi, idf, af) by route");
  cmd_sequence->add_option("--name", seq_name, "phi | idf | af")->required();
  cmd_sequence->add_option("--route", seq_route,
                           "recurrence | closed_form | poly_eval (phi) | poly_derivative");
  cmd_sequence->add_option("--max-n", seq.max_n, "largest n in the table");
  add_output_flags(cmd_sequence, seq);
  cmd_sequence->callback([&] {
    char* doc = nullptr;
    pyrenic_status st = pyrenic_render_sequence(seq_name.c_str(), seq_route.c_str(), seq.max_n,
                                                seq.format.c_str(), opt_str(seq.caps), &doc);
    rc = finish(st, doc, seq.out_path);
  });

  CommonArgs val;
  CLI::App* cmd_validate = app.add_subcommand("validate", "run the full consistency matrix");
  cmd_validate->add_option("--max-n", val.max_n, "clamp for every per-n sweep");
  cmd_validate->add_option("--inject-fault", val.fault,
                           "deliberately corrupt one computation (corrupt-forcing-seed)");
  add_output_flags(cmd_validate, val);
  cmd_validate->callback([&] {
    char* doc = nullptr;
    pyrenic_status st = pyrenic_render_validate(val.max_n, opt_str(val.caps), opt_str(val.fault),
                                                val.format.c_str(), &doc);
    rc = finish(st, doc, val.out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}

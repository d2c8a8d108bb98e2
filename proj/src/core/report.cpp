#include "core/report.hpp"

#include <sstream>
#include <type_traits>

#include "core/antiforcing.hpp"
#include "core/errors.hpp"
#include "core/forcing.hpp"
#include "core/matching.hpp"
#include "core/sequences.hpp"
#include "json.hpp"

namespace pyrenic {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::vector<int>> oracle_extras(const ParsedInput& in) {
  if (in.system && (in.system->kind == SystemKind::pyrene_chain ||
                    in.system->kind == SystemKind::auxiliary))
    return junction_peripheries(*in.system, in.graph);
  return {};
}

ordered_json cells_json(const HexSystem& sys) {
  ordered_json a = ordered_json::array();
  for (const Cell& c : sys.cells) a.push_back({c.q, c.r});
  return a;
}

ordered_json coeff_strings(const IntPoly& p) {
  ordered_json a = ordered_json::array();
  for (const BigInt& c : p.coeffs()) a.push_back(c.str());
  return a;
}

std::string csv_join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  line += '\n';
  return line;
}

std::string ids_text(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::string histogram_csv(const IntPoly& p) {
  SpectrumReport sp = spectrum_from_poly(p);
  std::string out = "value,count\n";
  for (const auto& [v, c] : sp.histogram) out += csv_join({std::to_string(v), c.str()});
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  fail(ErrorCode::invalid_parameter, "unknown format: " + s);
}

Quantity parse_kind(const std::string& s) {
  if (s == "forcing") return Quantity::forcing;
  if (s == "antiforcing") return Quantity::antiforcing;
  fail(ErrorCode::invalid_parameter, "unknown kind: " + s);
}

ComputeMethod parse_method(const std::string& s) {
  if (s == "brute") return ComputeMethod::brute;
  if (s == "oracle") return ComputeMethod::oracle;
  if (s == "recurrence") return ComputeMethod::recurrence;
  if (s == "closed") return ComputeMethod::closed;
  fail(ErrorCode::invalid_parameter, "unknown method: " + s);
}

const char* format_token(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

const char* kind_token(Quantity k) { return k == Quantity::forcing ? "forcing" : "antiforcing"; }

const char* method_token(ComputeMethod m) {
  switch (m) {
    case ComputeMethod::brute:
      return "brute";
    case ComputeMethod::oracle:
      return "oracle";
    case ComputeMethod::recurrence:
      return "recurrence";
    case ComputeMethod::closed:
      return "closed";
  }
  return "?";
}

RunCaps parse_caps_json(const std::string& text) {
  RunCaps caps;
  if (text.empty()) return caps;
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    fail(ErrorCode::parse_error, "caps must be a JSON object");
  auto take = [&](const char* key, auto& slot) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.template get<long long>() <= 0)
      fail(ErrorCode::invalid_parameter, std::string("cap ") + key + " must be a positive integer");
    slot = static_cast<std::remove_reference_t<decltype(slot)>>(v.template get<long long>());
    j.erase(key);
  };
  take("brute_matchings", caps.brute_matchings);
  take("antiforcing_matchings", caps.antiforcing_matchings);
  take("antiforcing_width", caps.antiforcing_width);
  take("oracle_max_n", caps.oracle_max_n);
  take("arith_max_n", caps.arith_max_n);
  if (!j.empty()) fail(ErrorCode::parse_error, "unknown cap key: " + j.begin().key());
  return caps;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

void require_oracle_eligible(const ParsedInput& in, const RunCaps& caps) {
  if (!in.system || (in.system->kind != SystemKind::pyrene_chain &&
                     in.system->kind != SystemKind::auxiliary))
    fail(ErrorCode::unsupported_graph,
         "oracle method requires a pyrene-chain or auxiliary system");
  if (in.system->n > caps.oracle_max_n)
    fail(ErrorCode::cap_exceeded, "chain length " + std::to_string(in.system->n) +
                                      " exceeds the oracle cap of " +
                                      std::to_string(caps.oracle_max_n));
}

int require_chain_arith(const ParsedInput& in, const RunCaps& caps) {
  if (!in.system || in.system->kind != SystemKind::pyrene_chain)
    fail(ErrorCode::unsupported_graph,
         "recurrence and closed-form methods require a pyrene-chain system");
  if (in.system->n > caps.arith_max_n)
    fail(ErrorCode::cap_exceeded, "chain length " + std::to_string(in.system->n) +
                                      " exceeds the arithmetic cap of " +
                                      std::to_string(caps.arith_max_n));
  return in.system->n;
}

IntPoly compute_polynomial(const ParsedInput& in, Quantity kind, ComputeMethod method,
                           const RunCaps& caps) {
  switch (method) {
    case ComputeMethod::brute:
      return kind == Quantity::forcing
                 ? forcing_polynomial_brute(in.graph, caps)
                 : antiforcing_polynomial_brute(in.graph, oracle_extras(in), caps);
    case ComputeMethod::oracle:
      require_oracle_eligible(in, caps);
      return kind == Quantity::forcing
                 ? forcing_polynomial_oracle(in.graph)
                 : antiforcing_polynomial_oracle(in.graph, oracle_extras(in));
    case ComputeMethod::recurrence:
    case ComputeMethod::closed: {
      int n = require_chain_arith(in, caps);
      if (kind == Quantity::forcing)
        return method == ComputeMethod::recurrence ? forcing_poly_recurrence(n)
                                                   : forcing_poly_closed(n);
      return method == ComputeMethod::recurrence ? antiforcing_poly_recurrence(n)
                                                 : antiforcing_poly_closed(n);
    }
  }
  fail(ErrorCode::internal_error, "compute_polynomial: bad method");
}

std::string render_generate(const ParsedInput& in, OutputFormat f) {
  const Graph& g = in.graph;
  auto parts = g.bipartition_sizes();
  if (f == OutputFormat::json) {
    ordered_json j;
    if (in.system) j["cells"] = cells_json(*in.system);
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = g.face_count();
    j["bipartition"] = {parts[0], parts[1]};
    return dump(j);
  }
  std::string cells;
  if (in.system) cells = serialize_system(*in.system);
  std::string out = "vertices,edges,faces,class0,class1,cells\n";
  out += csv_join({std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
                   std::to_string(g.face_count()), std::to_string(parts[0]),
                   std::to_string(parts[1]), cells});
  return out;
}

std::string render_matchings(const ParsedInput& in, const std::optional<Quantity>& kind,
                             ComputeMethod method, OutputFormat f, const RunCaps& caps) {
  if (method == ComputeMethod::recurrence || method == ComputeMethod::closed)
    fail(ErrorCode::unsupported_graph,
         "matchings listing needs an enumerating method (brute or oracle)");
  if (method == ComputeMethod::oracle) require_oracle_eligible(in, caps);
  const Graph& g = in.graph;
  std::vector<Matching> pms;
  bool over = false;
  for_each_perfect_matching(g, nullptr, nullptr, [&](const Matching& m) {
    if (method == ComputeMethod::brute &&
        static_cast<long long>(pms.size()) >= caps.brute_matchings) {
      over = true;
      return false;
    }
    pms.push_back(m);
    return true;
  });
  if (over)
    fail(ErrorCode::cap_exceeded, "perfect matching count exceeds the brute cap of " +
                                      std::to_string(caps.brute_matchings));
  std::vector<std::vector<int>> edge_lists;
  edge_lists.reserve(pms.size());
  for (const auto& m : pms) edge_lists.push_back(m.edge_ids());
  std::vector<int> values;
  if (kind) {
    auto extras = oracle_extras(in);
    values.reserve(pms.size());
    for (const auto& m : pms) {
      if (*kind == Quantity::forcing)
        values.push_back(method == ComputeMethod::oracle ? forcing_number_oracle(g, m).value
                                                         : forcing_number(g, m).value);
      else
        values.push_back(method == ComputeMethod::oracle
                             ? antiforcing_number_oracle(g, m, extras).value
                             : antiforcing_number(g, m, extras, caps).value);
    }
  }
  if (f == OutputFormat::json) {
    ordered_json j;
    j["count"] = pms.size();
    if (kind) {
      j["kind"] = kind_token(*kind);
      j["method"] = method_token(method);
    }
    j["matchings"] = edge_lists;
    if (kind) j["values"] = values;
    return dump(j);
  }
  std::string out = kind ? "index,edges,value\n" : "index,edges\n";
  for (std::size_t i = 0; i < edge_lists.size(); ++i) {
    std::vector<std::string> row{std::to_string(i), ids_text(edge_lists[i])};
    if (kind) row.push_back(std::to_string(values[i]));
    out += csv_join(row);
  }
  return out;
}

std::string render_polynomial(const ParsedInput& in, Quantity kind, ComputeMethod method,
                              OutputFormat f, const RunCaps& caps) {
  IntPoly p = compute_polynomial(in, kind, method, caps);
  if (f == OutputFormat::csv) return histogram_csv(p);
  ordered_json j;
  j["kind"] = kind_token(kind);
  j["method"] = method_token(method);
  j["polynomial"] = coeff_strings(p);
  j["min"] = p.is_zero() ? 0 : static_cast<int>(p.valuation());
  j["max"] = p.is_zero() ? 0 : static_cast<int>(p.degree());
  j["phi"] = p.eval(1).str();
  j[kind == Quantity::forcing ? "idf" : "af"] = p.derivative().eval(1).str();
  return dump(j);
}

std::string render_spectrum(const ParsedInput& in, Quantity kind, ComputeMethod method,
                            OutputFormat f, const RunCaps& caps) {
  IntPoly p = compute_polynomial(in, kind, method, caps);
  if (f == OutputFormat::csv) return histogram_csv(p);
  SpectrumReport sp = spectrum_from_poly(p);
  ordered_json j;
  j["kind"] = kind_token(kind);
  j["method"] = method_token(method);
  ordered_json h = ordered_json::object();
  for (const auto& [v, c] : sp.histogram) h[std::to_string(v)] = c.str();
  j["histogram"] = h;
  j["min"] = sp.min_value;
  j["max"] = sp.max_value;
  j["contiguous"] = sp.contiguous;
  return dump(j);
}

std::string render_sequence(const std::string& name, const std::string& route, int max_n,
                            OutputFormat f, const RunCaps& caps) {
  if (max_n > caps.arith_max_n)
    fail(ErrorCode::cap_exceeded, "max n " + std::to_string(max_n) +
                                      " exceeds the arithmetic cap of " +
                                      std::to_string(caps.arith_max_n));
  SequenceTable t = sequence_table(name, route, max_n);
  if (f == OutputFormat::json) {
    ordered_json j;
    j["name"] = t.name;
    j["route"] = t.route;
    j["max_n"] = max_n;
    ordered_json vals = ordered_json::array();
    for (const BigInt& v : t.values) vals.push_back(v.str());
    j["values"] = vals;
    return dump(j);
  }
  std::string out = "n,route,value\n";
  for (std::size_t i = 0; i < t.values.size(); ++i)
    out += csv_join({std::to_string(i), t.route, t.values[i].str()});
  return out;
}

}  // namespace pyrenic

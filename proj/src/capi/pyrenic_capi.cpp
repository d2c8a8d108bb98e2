#define PYRENIC_API __attribute__((visibility("default")))
#include "pyrenic.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/antiforcing.hpp"
#include "core/errors.hpp"
#include "core/forcing.hpp"
#include "core/hexsystem.hpp"
#include "core/matching.hpp"
#include "core/report.hpp"
#include "core/validate.hpp"

struct pyrenic_system {
  pyrenic::ParsedInput in;
};

struct pyrenic_matchings {
  std::uint64_t host = 0;
  std::vector<pyrenic::Matching> items;
  std::vector<std::vector<int>> edge_lists;
};

namespace {

thread_local std::string t_last_error;

pyrenic_status map_code(pyrenic::ErrorCode c) {
  switch (c) {
    case pyrenic::ErrorCode::invalid_parameter:
      return PYRENIC_ERR_INVALID_PARAMETER;
    case pyrenic::ErrorCode::parse_error:
      return PYRENIC_ERR_PARSE;
    case pyrenic::ErrorCode::unsupported_graph:
      return PYRENIC_ERR_UNSUPPORTED_GRAPH;
    case pyrenic::ErrorCode::no_perfect_matching:
      return PYRENIC_ERR_NO_PERFECT_MATCHING;
    case pyrenic::ErrorCode::cap_exceeded:
      return PYRENIC_ERR_CAP_EXCEEDED;
    case pyrenic::ErrorCode::validation_failed:
      return PYRENIC_ERR_VALIDATION;
    case pyrenic::ErrorCode::internal_error:
      return PYRENIC_ERR_INTERNAL;
  }
  return PYRENIC_ERR_INTERNAL;
}

template <typename F>
pyrenic_status wrap(F&& body) {
  try {
    body();
    t_last_error.clear();
    return PYRENIC_OK;
  } catch (const pyrenic::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PYRENIC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) return nullptr;
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) pyrenic::fail(pyrenic::ErrorCode::invalid_parameter, what);
}

std::string text_or_empty(const char* s) { return s ? std::string(s) : std::string(); }

pyrenic::RunCaps caps_from(const char* caps_json) {
  return pyrenic::parse_caps_json(text_or_empty(caps_json));
}

void emit(char** out, const std::string& doc) {
  *out = dup_string(doc);
  if (!*out) pyrenic::fail(pyrenic::ErrorCode::internal_error, "out of memory");
}

const pyrenic::Matching& matching_at(const pyrenic_matchings* ms, size_t index) {
  require(ms != nullptr, "matchings handle is null");
  if (index >= ms->items.size())
    pyrenic::fail(pyrenic::ErrorCode::invalid_parameter, "matching index out of range");
  return ms->items[index];
}

std::vector<std::vector<int>> system_extras(const pyrenic_system* sys) {
  const auto& in = sys->in;
  if (in.system && (in.system->kind == pyrenic::SystemKind::pyrene_chain ||
                    in.system->kind == pyrenic::SystemKind::auxiliary))
    return pyrenic::junction_peripheries(*in.system, in.graph);
  return {};
}

void require_oracle_kind(const pyrenic_system* sys) {
  const auto& in = sys->in;
  if (!in.system || (in.system->kind != pyrenic::SystemKind::pyrene_chain &&
                     in.system->kind != pyrenic::SystemKind::auxiliary))
    pyrenic::fail(pyrenic::ErrorCode::unsupported_graph,
                  "oracle method requires a pyrene-chain or auxiliary system");
}

}  // namespace

extern "C" {

const char* pyrenic_version(void) { return "1.0.0"; }

const char* pyrenic_last_error(void) { return t_last_error.c_str(); }

void pyrenic_string_free(char* s) { std::free(s); }

pyrenic_status pyrenic_system_parse(const char* json_text, pyrenic_system** out) {
  return wrap([&] {
    require(json_text && out, "null argument");
    auto sys = std::make_unique<pyrenic_system>();
    sys->in = pyrenic::parse_input(json_text);
    *out = sys.release();
  });
}

pyrenic_status pyrenic_system_chain(int n, pyrenic_system** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    auto sys = std::make_unique<pyrenic_system>();
    sys->in.system = pyrenic::build_pyrene_chain(n);
    sys->in.graph = pyrenic::to_graph(*sys->in.system);
    *out = sys.release();
  });
}

pyrenic_status pyrenic_system_auxiliary(int n, pyrenic_system** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    auto sys = std::make_unique<pyrenic_system>();
    sys->in.system = pyrenic::build_auxiliary_system(n);
    sys->in.graph = pyrenic::to_graph(*sys->in.system);
    *out = sys.release();
  });
}

void pyrenic_system_free(pyrenic_system* sys) { delete sys; }

pyrenic_status pyrenic_system_stats(const pyrenic_system* sys, int* vertices, int* edges,
                                    int* faces) {
  return wrap([&] {
    require(sys != nullptr, "system handle is null");
    if (vertices) *vertices = sys->in.graph.vertex_count();
    if (edges) *edges = sys->in.graph.edge_count();
    if (faces) *faces = sys->in.graph.face_count();
  });
}

pyrenic_status pyrenic_system_serialize(const pyrenic_system* sys, char** out_json) {
  return wrap([&] {
    require(sys && out_json, "null argument");
    if (!sys->in.system)
      pyrenic::fail(pyrenic::ErrorCode::unsupported_graph,
                    "input has no hexagonal cell representation");
    emit(out_json, pyrenic::serialize_system(*sys->in.system));
  });
}

pyrenic_status pyrenic_matchings_enumerate(const pyrenic_system* sys, long long cap,
                                           pyrenic_matchings** out) {
  return wrap([&] {
    require(sys && out, "null argument");
    require(cap >= 0, "cap must be nonnegative");
    auto ms = std::make_unique<pyrenic_matchings>();
    ms->host = sys->in.graph.id;
    bool over = false;
    pyrenic::for_each_perfect_matching(sys->in.graph, nullptr, nullptr,
                                       [&](const pyrenic::Matching& m) {
                                         if (cap > 0 &&
                                             static_cast<long long>(ms->items.size()) >= cap) {
                                           over = true;
                                           return false;
                                         }
                                         ms->items.push_back(m);
                                         return true;
                                       });
    if (over)
      pyrenic::fail(pyrenic::ErrorCode::cap_exceeded,
                    "perfect matching count exceeds the requested cap");
    ms->edge_lists.reserve(ms->items.size());
    for (const auto& m : ms->items) ms->edge_lists.push_back(m.edge_ids());
    *out = ms.release();
  });
}

pyrenic_status pyrenic_matchings_count(const pyrenic_matchings* ms, size_t* count) {
  return wrap([&] {
    require(ms && count, "null argument");
    *count = ms->items.size();
  });
}

pyrenic_status pyrenic_matchings_edges(const pyrenic_matchings* ms, size_t index, const int** ids,
                                       size_t* len) {
  return wrap([&] {
    require(ms && ids && len, "null argument");
    matching_at(ms, index);
    *ids = ms->edge_lists[index].data();
    *len = ms->edge_lists[index].size();
  });
}

void pyrenic_matchings_free(pyrenic_matchings* ms) { delete ms; }

pyrenic_status pyrenic_forcing_number(const pyrenic_system* sys, const pyrenic_matchings* ms,
                                      size_t index, const char* method, const char* caps_json,
                                      int* value) {
  return wrap([&] {
    require(sys && method && value, "null argument");
    const pyrenic::Matching& m = matching_at(ms, index);
    require(m.host == sys->in.graph.id, "matchings belong to a different system");
    caps_from(caps_json);  // reject malformed caps even when this path takes none
    std::string tok(method);
    if (tok == "brute") {
      *value = pyrenic::forcing_number(sys->in.graph, m).value;
    } else if (tok == "oracle") {
      require_oracle_kind(sys);
      *value = pyrenic::forcing_number_oracle(sys->in.graph, m).value;
    } else {
      pyrenic::fail(pyrenic::ErrorCode::invalid_parameter,
                    "method must be brute or oracle: " + tok);
    }
  });
}

pyrenic_status pyrenic_antiforcing_number(const pyrenic_system* sys, const pyrenic_matchings* ms,
                                          size_t index, const char* method, const char* caps_json,
                                          int* value) {
  return wrap([&] {
    require(sys && method && value, "null argument");
    const pyrenic::Matching& m = matching_at(ms, index);
    require(m.host == sys->in.graph.id, "matchings belong to a different system");
    const pyrenic::RunCaps caps = caps_from(caps_json);  // validated on every path
    auto extras = system_extras(sys);
    std::string tok(method);
    if (tok == "brute") {
      *value = pyrenic::antiforcing_number(sys->in.graph, m, extras, caps).value;
    } else if (tok == "oracle") {
      require_oracle_kind(sys);
      *value = pyrenic::antiforcing_number_oracle(sys->in.graph, m, extras).value;
    } else {
      pyrenic::fail(pyrenic::ErrorCode::invalid_parameter,
                    "method must be brute or oracle: " + tok);
    }
  });
}

pyrenic_status pyrenic_render_generate(const char* system_json, const char* format, char** out) {
  return wrap([&] {
    require(system_json && format && out, "null argument");
    pyrenic::ParsedInput in = pyrenic::parse_input(system_json);
    emit(out, pyrenic::render_generate(in, pyrenic::parse_format(format)));
  });
}

pyrenic_status pyrenic_render_matchings(const char* system_json, const char* kind_or_null,
                                        const char* method, const char* format,
                                        const char* caps_json, char** out) {
  return wrap([&] {
    require(system_json && method && format && out, "null argument");
    pyrenic::ParsedInput in = pyrenic::parse_input(system_json);
    std::optional<pyrenic::Quantity> kind;
    if (kind_or_null) kind = pyrenic::parse_kind(kind_or_null);
    emit(out, pyrenic::render_matchings(in, kind, pyrenic::parse_method(method),
                                        pyrenic::parse_format(format), caps_from(caps_json)));
  });
}

pyrenic_status pyrenic_render_polynomial(const char* system_json, const char* kind,
                                         const char* method, const char* format,
                                         const char* caps_json, char** out) {
  return wrap([&] {
    require(system_json && kind && method && format && out, "null argument");
    pyrenic::ParsedInput in = pyrenic::parse_input(system_json);
    emit(out, pyrenic::render_polynomial(in, pyrenic::parse_kind(kind),
                                         pyrenic::parse_method(method),
                                         pyrenic::parse_format(format), caps_from(caps_json)));
  });
}

pyrenic_status pyrenic_render_spectrum(const char* system_json, const char* kind,
                                       const char* method, const char* format,
                                       const char* caps_json, char** out) {
  return wrap([&] {
    require(system_json && kind && method && format && out, "null argument");
    pyrenic::ParsedInput in = pyrenic::parse_input(system_json);
    emit(out, pyrenic::render_spectrum(in, pyrenic::parse_kind(kind),
                                       pyrenic::parse_method(method), pyrenic::parse_format(format),
                                       caps_from(caps_json)));
  });
}

pyrenic_status pyrenic_render_sequence(const char* name, const char* route, int max_n,
                                       const char* format, const char* caps_json, char** out) {
  return wrap([&] {
    require(name && route && format && out, "null argument");
    emit(out, pyrenic::render_sequence(name, route, max_n, pyrenic::parse_format(format),
                                       caps_from(caps_json)));
  });
}

pyrenic_status pyrenic_render_validate(int max_n, const char* caps_json,
                                       const char* inject_fault_or_null, const char* format,
                                       char** out) {
  return wrap([&] {
    require(format && out, "null argument");
    pyrenic::ValidateOptions opt;
    opt.max_n = max_n;
    opt.caps = caps_from(caps_json);
    opt.inject_fault = text_or_empty(inject_fault_or_null);
    std::vector<pyrenic::CheckResult> results = pyrenic::run_checks(opt);
    emit(out, pyrenic::render_validate(results, pyrenic::parse_format(format)));
    std::string failing;
    for (const auto& r : results)
      if (r.status == pyrenic::CheckStatus::fail) {
        if (!failing.empty()) failing += ",";
        failing += r.id;
      }
    if (!failing.empty())
      pyrenic::fail(pyrenic::ErrorCode::validation_failed, "failing checks: " + failing);
  });
}

}  // extern "C"

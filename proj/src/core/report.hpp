#pragma once

#include <optional>
#include <string>

#include "core/caps.hpp"
#include "core/hexsystem.hpp"
#include "core/intpoly.hpp"

namespace pyrenic {

enum class OutputFormat { json, csv };
enum class Quantity { forcing, antiforcing };
enum class ComputeMethod { brute, oracle, recurrence, closed };

OutputFormat parse_format(const std::string& s);
Quantity parse_kind(const std::string& s);
ComputeMethod parse_method(const std::string& s);
const char* format_token(OutputFormat f);
const char* kind_token(Quantity k);
const char* method_token(ComputeMethod m);

// Partial override of the defaults; unknown keys or non-positive values are
// rejected. Empty text keeps every default.
RunCaps parse_caps_json(const std::string& text);

// RFC 4180 field quoting: quotes only when the field needs it.
std::string csv_field(const std::string& s);

// Method / system gating shared by polynomial, spectrum and matchings runs.
// oracle requires a pyrene-chain or auxiliary system with n within
// caps.oracle_max_n; recurrence / closed require a pyrene chain within
// caps.arith_max_n. Returns the chain length for the arithmetic methods.
void require_oracle_eligible(const ParsedInput& in, const RunCaps& caps);
int require_chain_arith(const ParsedInput& in, const RunCaps& caps);

IntPoly compute_polynomial(const ParsedInput& in, Quantity kind, ComputeMethod method,
                           const RunCaps& caps);

// Renderers produce the final byte-exact document (trailing newline included).
std::string render_generate(const ParsedInput& in, OutputFormat f);
std::string render_matchings(const ParsedInput& in, const std::optional<Quantity>& kind,
                             ComputeMethod method, OutputFormat f, const RunCaps& caps);
std::string render_polynomial(const ParsedInput& in, Quantity kind, ComputeMethod method,
                              OutputFormat f, const RunCaps& caps);
std::string render_spectrum(const ParsedInput& in, Quantity kind, ComputeMethod method,
                            OutputFormat f, const RunCaps& caps);
std::string render_sequence(const std::string& name, const std::string& route, int max_n,
                            OutputFormat f, const RunCaps& caps);

}  // namespace pyrenic

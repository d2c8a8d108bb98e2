#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/caps.hpp"
#include "core/report.hpp"

namespace pyrenic {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // first failing case, or the reason a check was skipped
};

struct ValidateOptions {
  int max_n = 40;            // clamps every per-n sweep (brute/oracle/arithmetic)
  RunCaps caps;
  std::string inject_fault;  // "" | "corrupt-forcing-seed"
  std::uint64_t sample_seed = 0x9e3779b97f4a7c15ULL;  // witness minimality sampling
};

// The full consistency matrix in a fixed order. Checks that cannot run under
// the configured limits report skip, never fail. Unknown inject_fault tokens
// raise invalid-parameter.
std::vector<CheckResult> run_checks(const ValidateOptions& opt);

const char* status_token(CheckStatus s);
std::string render_validate(const std::vector<CheckResult>& results, OutputFormat f);

}  // namespace pyrenic

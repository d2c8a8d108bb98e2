#pragma once

#include <stdexcept>
#include <string>

namespace pyrenic {

enum class ErrorCode {
  invalid_parameter,
  parse_error,
  unsupported_graph,
  no_perfect_matching,
  cap_exceeded,
  validation_failed,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace pyrenic

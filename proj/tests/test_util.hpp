#pragma once

#include <optional>
#include <utility>

#include "core/errors.hpp"

namespace pyrenic_test {

// Runs f and reports the ErrorCode it threw, or nullopt if it returned.
template <typename F>
std::optional<pyrenic::ErrorCode> code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const pyrenic::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace pyrenic_test

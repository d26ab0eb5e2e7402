#pragma once

#include <optional>

#include "schurpos/common.hpp"

namespace testutil {

// Runs f and reports the library error code it throws, if any.
template <typename F>
std::optional<schurpos::errc> error_code_of(F&& f) {
  try {
    f();
  } catch (const schurpos::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil

#pragma once

#include "ecassoc/error.hpp"

#include <optional>

namespace oracle {

/// Code of the ecassoc::Error thrown by f, or nullopt if none is thrown.
template <typename F>
std::optional<ecassoc::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const ecassoc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace oracle

#pragma once

#include <optional>

#include "faithrep/error.hpp"

template <typename F>
std::optional<faithrep::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const faithrep::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#pragma once

#include <stdexcept>
#include <string>

namespace pmv {

/// Thrown when a computation would exceed a configured size/complexity cap.
/// The CLI maps this to its dedicated exit code; nothing is silently truncated.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pmv

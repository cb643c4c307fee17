#pragma once

#include <stdexcept>
#include <string>

namespace netopt {

/// Invalid experiment description (schema, dimensions, stochastic
/// matrices, connectivity prechecks). The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant violation in the estimate-list machinery.
struct ProtocolError : std::logic_error {
  explicit ProtocolError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace netopt

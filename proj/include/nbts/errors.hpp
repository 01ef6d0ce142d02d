#pragma once

#include <stdexcept>
#include <string>

namespace nbts {

/// Structurally invalid input to an operation: dimension mismatch,
/// out-of-range parameter, malformed request.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// External data (correlation files, rational literals, projection specs)
/// that cannot be parsed. The message pinpoints the offending entry.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nbts

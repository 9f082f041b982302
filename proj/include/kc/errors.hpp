#pragma once

#include <stdexcept>
#include <string>

namespace kc {

// Bad input text or an inconsistent diagram.  CLI exit code 2.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg)), pos(position) {}
  explicit ParseError(std::string msg)
      : std::runtime_error(std::move(msg)), pos(std::string::npos) {}
  std::size_t pos;  // byte offset into the input, npos if not applicable
};

// A resource guard tripped (crossing count, matrix dimension, ...).
// CLI exit code 3.
class CapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Soft limits for the expensive operations.  All overridable.
struct Caps {
  int max_skein_crossings = 16;    // skein recursion
  int max_resolve_crossings = 20;  // 2^c resolution enumeration
  long max_state_dim = 4096;       // n^O transfer-matrix dimension
  int max_segments = 64;           // labeling enumeration
};

}  // namespace kc

#pragma once

#include <stdexcept>
#include <string>

namespace subcount {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested construction or enumeration exceeds the configured order cap.
struct size_error : error {
  using error::error;
};

// Metacyclic parameters violate their congruences, or a constructed table
// fails validation.
struct presentation_error : error {
  using error::error;
};

// A permutation or matrix generator is not a bijection / not invertible.
struct generator_error : error {
  using error::error;
};

// An exact-division or overflow assertion failed inside a closed-form count.
struct arithmetic_error : error {
  using error::error;
};

// A claimed value failed its brute-force check; raised only by operations
// that refuse to emit results derived from unverified data.
struct verification_error : error {
  using error::error;
};

// Expression or factored-order syntax error; `pos` is a 0-based offset into
// the input string.
struct parse_error : error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t position)
      : error(msg), pos(position) {}
};

}  // namespace subcount

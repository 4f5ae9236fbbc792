#pragma once

#include <stdexcept>
#include <string>

namespace semilen {

/// Malformed or out-of-contract input: ragged tables, bad letters, bad
/// flags. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semilen

#pragma once

#include <stdexcept>
#include <string>

namespace exgl {

// Error taxonomy shared with the C API status codes.
enum class errc {
  argument = 1,        // bad input (violated precondition the caller controls)
  parse = 2,           // malformed ring spec / JSON
  capacity = 3,        // configured cap exceeded
  not_invertible = 4,  // matrix has no two-sided inverse
  precondition = 5,    // mathematical hypothesis of an operation fails
  invariant = 6,       // internal consistency check failed (a bug, not an outcome)
  unsupported = 7,     // operation needs larger degree / different ring kind
  sampling = 8,        // rejection sampling did not reach the requested count
  io = 9,              // file access
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

inline void require(bool cond, errc kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace exgl

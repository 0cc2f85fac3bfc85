#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pqf {

// Error classes are disjoint; the CLI maps each one to its own exit code.
enum class ErrorKind {
  kUsage,
  kMalformedInput,
  kSchemaViolation,
  kInvariantViolation,
  kAlgorithmFailure,
  kSizeCap,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require_dimension_at_most(std::size_t dim, std::size_t cap,
                                      std::string_view op) {
  if (dim > cap) {
    fail(ErrorKind::kSizeCap, std::string(op) + ": dimension " +
                                  std::to_string(dim) + " exceeds cap " +
                                  std::to_string(cap));
  }
}

}  // namespace pqf

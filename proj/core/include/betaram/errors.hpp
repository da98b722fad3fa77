#pragma once

#include <stdexcept>
#include <string>

namespace betaram {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index beyond a precomputed table or a supported order.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Requested accuracy cannot be reached within the work limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed request (unknown claim filter, bad option combination).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] void throw_domain(const std::string& where, const std::string& what);
[[noreturn]] void throw_range(const std::string& where, const std::string& what);

}  // namespace detail
}  // namespace betaram

#pragma once

#include <stdexcept>
#include <string>

namespace cayleyforge {

// Bad argument value (e.g. order 0 for a cyclic group).
class invalid_parameter_error : public std::invalid_argument {
 public:
  explicit invalid_parameter_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold for the given
// inputs. The message names the offending element or hypothesis.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Construction would exceed a size cap (vertex count, total degree,
// wreath base order, ...).
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cayleyforge

#pragma once

#include <stdexcept>
#include <string>

namespace ikmix {

/// An argument lies outside the support or parameter space of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input: mismatched lengths, bad indices, unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ikmix

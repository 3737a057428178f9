#pragma once

#include <stdexcept>
#include <string>

namespace mlspec {

// Input outside an operation's domain (bad word, t out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource cap (node count, family size) was exceeded.
// Never returned as a silent partial result.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two certified bounds crossed; indicates a bug or an unsound surrogate.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mlspec

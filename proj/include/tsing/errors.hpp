#pragma once

#include <stdexcept>
#include <string>

namespace tsing {

// Precondition violations on user-supplied values (bad strings, out-of-range
// parameters, singular systems). The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A checked 64-bit operation left the representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace tsing

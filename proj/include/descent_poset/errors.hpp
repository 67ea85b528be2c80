#pragma once

#include <stdexcept>
#include <string>

namespace descent_poset {

// Malformed textual input: bad digits, duplicate or missing letters.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed request outside an operation's domain (wrong descent count,
// bottom not contained in top, size guard exceeded, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact arithmetic left the range of the fixed-width fast path.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A fast path disagreed with its oracle.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace descent_poset

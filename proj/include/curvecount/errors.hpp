#pragma once

#include <stdexcept>
#include <string>

namespace curvecount {

// Precondition violated by the caller (bad argument, wrong grid rank, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A coefficient was requested outside the range where it is known exactly.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Extracted Gopakumar-Vafa data failed to be integral, or a higher genus
// showed up than the caller allowed.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rational strings, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace curvecount

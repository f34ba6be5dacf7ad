#pragma once

#include <stdexcept>
#include <string>

namespace thom {

// Caller broke an operation precondition (mismatched tables, unbound names).
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

// Mathematically undefined request (non-unit series, hit a zero pivot, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace thom

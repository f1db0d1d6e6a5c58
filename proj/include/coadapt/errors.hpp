#pragma once

#include <stdexcept>
#include <string>

namespace coadapt {

// Input violated a documented contract (bad config value, inconsistent file
// content, infeasible request). Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be parsed (wrong header, malformed row, bad number).
// Messages name the offending line where one exists. CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state the library promises cannot occur. Indicates a bug rather than bad
// input. CLI exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coadapt

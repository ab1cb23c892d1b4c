#pragma once

#include <stdexcept>
#include <string>

namespace simplex_lab {

// Arithmetic that has no value in the ring: division by zero, inexact
// Laurent division, operands from different quadratic extensions.
class RingError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A computation contradicted a proven identity. Seeing one of these means
// either a bug here or a counterexample there.
class ContradictionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Malformed external input (JSON documents, point labels, CLI values).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace simplex_lab

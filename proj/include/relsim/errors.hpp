#ifndef RELSIM_ERRORS_HPP
#define RELSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relsim {

// Malformed text input (scalar literals, event/relation/coords files).
// Messages carry "file:line:" prefixes where a line is known.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic domain violation (division by zero and friends).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace relsim

#endif

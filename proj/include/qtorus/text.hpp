#pragma once

// Text formats used by the CLI and tests:
//  - elementary matrices: rows of '+'/'-' joined by '/', row-major;
//    '+' means entry +1 (E bit 0), '-' means -1 (E bit 1).
//    Example: h_{1,3} = "+-+/-++/+++".
//  - involutions: a string of '+'/'-' of length n.
//  - coset patterns: comma-separated binary member strings, character k of a
//    member being coordinate k+1; e.g. "000,110,101,011".  The empty literal
//    denotes the unique rank-0 pattern.  Formatting emits members in
//    ascending order of their integer value (bit k = coordinate k+1).
//
// All parse failures raise ParseError with a human-readable location.

#include <stdexcept>
#include <string>

#include "qtorus/semilattice.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

/// Raised for malformed text input; the message carries position info.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for structurally valid sign grids that are not elementary (not
/// symmetric, or a '-' on the diagonal): such a quantum matrix admits no
/// graded involution.
class NotElementaryError : public ParseError {
 public:
  using ParseError::ParseError;
};

ElementaryMatrix parseElementary(const std::string& text);
std::string formatElementary(const ElementaryMatrix& e);

Involution parseInvolution(const std::string& text);
std::string formatInvolution(const Involution& tau);

CosetPattern parsePattern(const std::string& text);
std::string formatPattern(const CosetPattern& p);

}  // namespace qtorus

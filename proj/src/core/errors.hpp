// Error taxonomy for the exact-arithmetic core.
//
// Every failure the library can report is an Error carrying a stable code
// (mirrored one-to-one by the C API status codes) and a human-readable
// message assembled at the throw site.

#pragma once

#include <stdexcept>
#include <string>

namespace liegrade {

enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,   // malformed input (bad type tag, rank out of range, ...)
  not_a_field_element = 2,// division by zero, inverse of zero
  field_too_small = 3,    // an eigenvalue does not lie in the declared cyclotomic field
  not_diagonalizable = 4, // a restriction is not semisimple over the declared field
  structure_violation = 5,// algebraic invariant failed (Jacobi, grading, involution, ...)
  search_failed = 6,      // randomized search exhausted its retry budget
  cap_exceeded = 7,       // an enumeration outgrew its configured cap
  not_maximal_rank = 8,   // centralizer of the Cartan subspace is not a Cartan subalgebra
  lifting_obstruction = 9,// computed group fails the complex-reflection validation
  hypothesis_not_met = 10,// an operation's mathematical precondition is not satisfied
  parse_error = 11,       // malformed job description
  internal_error = 12,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_a_field_element: return "not_a_field_element";
    case ErrorCode::field_too_small: return "field_too_small";
    case ErrorCode::not_diagonalizable: return "not_diagonalizable";
    case ErrorCode::structure_violation: return "structure_violation";
    case ErrorCode::search_failed: return "search_failed";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::not_maximal_rank: return "not_maximal_rank";
    case ErrorCode::lifting_obstruction: return "lifting_obstruction";
    case ErrorCode::hypothesis_not_met: return "hypothesis_not_met";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::internal_error: return "internal_error";
  }
  return "unknown";
}

}  // namespace liegrade

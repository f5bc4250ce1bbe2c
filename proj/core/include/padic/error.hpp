#ifndef PADIC_ERROR_HPP
#define PADIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic {

// Every domain failure the library raises, by name. The CLI maps error to
// exit code 1 and parse_error (malformed user input, carries a position) to
// exit code 2.
enum class errc {
  not_prime,
  non_terminating_expansion,
  precondition_violation,
  budget_exceeded,
  denominator_not_coprime,
  base_mismatch,
  composite_base,
  division_by_zero,
  insufficient_precision,
  out_of_range,
  empty_input,
  zero_constant_term,
  not_eisenstein,
  place_mismatch,
  center_outside_ball,
  balls_intersect,
  degenerate_triangle,
  field_mismatch,
  not_integral,
  parse,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::non_terminating_expansion: return "NonTerminatingExpansion";
    case errc::precondition_violation: return "PreconditionViolation";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::denominator_not_coprime: return "DenominatorNotCoprime";
    case errc::base_mismatch: return "BaseMismatch";
    case errc::composite_base: return "CompositeBase";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::out_of_range: return "OutOfRange";
    case errc::empty_input: return "EmptyInput";
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::not_eisenstein: return "NotEisenstein";
    case errc::place_mismatch: return "PlaceMismatch";
    case errc::center_outside_ball: return "CenterOutsideBall";
    case errc::balls_intersect: return "BallsIntersect";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_integral: return "NotIntegral";
    case errc::parse: return "ParseError";
  }
  return "Error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : error(errc::parse,
              what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace padic

#endif

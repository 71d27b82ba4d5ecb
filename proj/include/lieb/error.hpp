#ifndef LIEB_ERROR_HPP
#define LIEB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lieb {

/// Error codes for all validated preconditions across the library.
enum class errc {
  dimension_mismatch,
  jacobi_violation,
  duplicate_bracket_entry,
  grade_mismatch,
  bound_exceeded,
  algebra_mismatch,
  grade_out_of_range,
  zero_input,
  mixed_grade,
  not_a_subspace,
  arity_grade_mismatch,
  closure_violation,
  modulus_violation,
  kernel_condition_failed,
  not_traceless_ideal,
  not_decomposable,
  not_invariant,
  arity_mismatch,
  degree_overflow,
  unknown_name,
  bad_parameter,
  not_nilpotent,
  parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace lieb

#endif

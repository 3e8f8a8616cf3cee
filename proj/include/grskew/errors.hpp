#pragma once

#include <stdexcept>
#include <string>

namespace grskew {

enum class errc {
  not_associative,
  no_identity,
  missing_inverse,
  index_out_of_range,
  invalid_parameter,
  characteristic_two,
  not_a_subgroup,
  not_normal,
  incompatible_orientation,
  trivial_orientation,
  context_mismatch,
  symmetric_element,
  too_large,
  not_classic_orientation,
  hypotheses_not_met,
  hypothesis_not_satisfied,
  parse_error,
  validation_error,
  timed_out,
  internal_inconsistency,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace grskew

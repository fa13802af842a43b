#pragma once

#include <stdexcept>
#include <string>

namespace qes {

// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class errc {
  empty_mode_list,
  non_positive_frequency,
  non_positive_exponent,
  constraint_violated,
  dimension_mismatch,
  negative_exponent,
  invalid_sector,
  index_out_of_range,
  not_tridiagonal,
  asymmetry_detected,
  tolerance_too_small,
  non_integer_entry,
  seed_too_large,
  cross_check_failed,
  bad_input,
  io_error,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_mode_list: return "EmptyModeList";
    case errc::non_positive_frequency: return "NonPositiveFrequency";
    case errc::non_positive_exponent: return "NonPositiveExponent";
    case errc::constraint_violated: return "ConstraintViolated";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::negative_exponent: return "NegativeExponent";
    case errc::invalid_sector: return "InvalidSector";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_tridiagonal: return "NotTridiagonal";
    case errc::asymmetry_detected: return "AsymmetryDetected";
    case errc::tolerance_too_small: return "ToleranceTooSmall";
    case errc::non_integer_entry: return "NonIntegerEntry";
    case errc::seed_too_large: return "SeedTooLarge";
    case errc::cross_check_failed: return "CrossCheckFailed";
    case errc::bad_input: return "BadInput";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

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

}  // namespace qes

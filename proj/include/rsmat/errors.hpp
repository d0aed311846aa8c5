#pragma once

#include <stdexcept>
#include <string>

namespace rsmat {

/// Error conditions raised by the library. Every throw carries one of these
/// codes so callers can react to the condition rather than the message text.
enum class errc {
  non_prime_modulus,
  mixed_fields,
  division_by_zero,
  not_square,
  non_integer_entry,
  unknown_label,
  infinite_field,
  enumeration_too_large,
  universe_mismatch,
  universe_too_large,
  closure_too_large,
  ground_too_large,
  too_many_transversals,
  not_a_partition_matrix,
  ground_mismatch,
  not_binary_dependence,
  wrong_field,
  length_mismatch,
  parse_error,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::non_prime_modulus: return "NonPrimeModulus";
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_square: return "NotSquare";
    case errc::non_integer_entry: return "NonIntegerEntry";
    case errc::unknown_label: return "UnknownLabel";
    case errc::infinite_field: return "InfiniteField";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::universe_mismatch: return "UniverseMismatch";
    case errc::universe_too_large: return "UniverseTooLarge";
    case errc::closure_too_large: return "ClosureTooLarge";
    case errc::ground_too_large: return "GroundTooLarge";
    case errc::too_many_transversals: return "TooManyTransversals";
    case errc::not_a_partition_matrix: return "NotAPartitionMatrix";
    case errc::ground_mismatch: return "GroundMismatch";
    case errc::not_binary_dependence: return "NotBinaryDependence";
    case errc::wrong_field: return "WrongField";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace rsmat

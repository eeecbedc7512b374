#include "sat3ce/error.hpp"

namespace sat3ce {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::MalformedHeader:
    return "malformed_header";
  case ErrorCode::MalformedBody:
    return "malformed_body";
  case ErrorCode::ClauseCountMismatch:
    return "clause_count_mismatch";
  case ErrorCode::VariableOutOfRange:
    return "variable_out_of_range";
  case ErrorCode::NotThreeSat:
    return "not_three_sat";
  case ErrorCode::LengthMismatch:
    return "length_mismatch";
  case ErrorCode::InvalidSize:
    return "invalid_size";
  case ErrorCode::NoSolution:
    return "no_solution";
  case ErrorCode::InvalidRange:
    return "invalid_range";
  case ErrorCode::InvalidSolution:
    return "invalid_solution";
  case ErrorCode::IndexOutOfRange:
    return "index_out_of_range";
  case ErrorCode::TooLarge:
    return "too_large";
  case ErrorCode::MissingTarget:
    return "missing_target";
  case ErrorCode::InvalidArgument:
    return "invalid_argument";
  case ErrorCode::IoError:
    return "io_error";
  }
  return "unknown";
}

} // namespace sat3ce

#pragma once

#include <stdexcept>
#include <string>

namespace demazure {

// Error codes surfaced through exceptions; the CLI maps them to exit codes.
enum class ErrorCode {
  invalid_graph,
  invalid_level,
  reduced_word_required,
  not_a_variety_point,
  bad_input,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_graph: return "INVALID_GRAPH";
    case ErrorCode::invalid_level: return "INVALID_LEVEL";
    case ErrorCode::reduced_word_required: return "REDUCED_WORD_REQUIRED";
    case ErrorCode::not_a_variety_point: return "NOT_A_VARIETY_POINT";
    case ErrorCode::bad_input: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

}  // namespace demazure

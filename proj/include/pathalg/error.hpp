#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathalg {

enum class ErrorCode {
  DanglingEndpoint,
  DuplicateId,
  UnsupportedInfiniteEmitter,
  AmbiguousInfiniteEmitter,
  InvalidPath,
  InvalidMorphism,
  InvalidInclusion,
  DomainMismatch,
  ContextMismatch,
  StarInPathMode,
  NotVertexInjective,
  NotMonotone,
  NotRegular,
  NotAdmissible,
  HypothesisNotMet,
  PreimageNotFound,
  ParseError,
  UnknownIdentifier,
};

std::string_view to_string(ErrorCode code);

/// True for codes caused by malformed or inconsistent input, as opposed to a
/// well-formed object failing a mathematical check.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathalg

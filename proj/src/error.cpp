#include "pathalg/error.hpp"

namespace pathalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnsupportedInfiniteEmitter: return "UnsupportedInfiniteEmitter";
    case ErrorCode::AmbiguousInfiniteEmitter: return "AmbiguousInfiniteEmitter";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::InvalidInclusion: return "InvalidInclusion";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::StarInPathMode: return "StarInPathMode";
    case ErrorCode::NotVertexInjective: return "NotVertexInjective";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::PreimageNotFound: return "PreimageNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotVertexInjective:
    case ErrorCode::NotMonotone:
    case ErrorCode::NotRegular:
    case ErrorCode::NotAdmissible:
    case ErrorCode::HypothesisNotMet:
    case ErrorCode::PreimageNotFound:
      return false;
    default:
      return true;
  }
}

}  // namespace pathalg

#include "freeidem/error.hpp"

namespace freeidem {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::MalformedInput:
        return "MalformedInput";
      case ErrorCode::DuplicateElement:
        return "DuplicateElement";
      case ErrorCode::UnknownElement:
        return "UnknownElement";
      case ErrorCode::MissingIdempotentLaw:
        return "MissingIdempotentLaw";
      case ErrorCode::NonBasicProduct:
        return "NonBasicProduct";
      case ErrorCode::HalfDefinedPair:
        return "HalfDefinedPair";
      case ErrorCode::NonIdempotentProduct:
        return "NonIdempotentProduct";
      case ErrorCode::NonAssociative:
        return "NonAssociative";
      case ErrorCode::UnknownClass:
        return "UnknownClass";
      case ErrorCode::UnknownLetter:
        return "UnknownLetter";
      case ErrorCode::NotRegular:
        return "NotRegular";
      case ErrorCode::ActionUndefined:
        return "ActionUndefined";
      case ErrorCode::ClassMismatch:
        return "ClassMismatch";
      case ErrorCode::BoundExceeded:
        return "BoundExceeded";
      case ErrorCode::UnknownBackend:
        return "UnknownBackend";
      case ErrorCode::BackendMismatch:
        return "BackendMismatch";
      case ErrorCode::InfiniteFixedSide:
        return "InfiniteFixedSide";
      case ErrorCode::UnsupportedRegime:
        return "UnsupportedRegime";
      case ErrorCode::SizeLimit:
        return "SizeLimit";
      case ErrorCode::Internal:
        return "Internal";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  void fail(ErrorCode code, std::string const& detail) {
    throw Error(code, detail);
  }

}  // namespace freeidem

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freeidem {

  enum class ErrorCode {
    MalformedInput,
    DuplicateElement,
    UnknownElement,
    MissingIdempotentLaw,
    NonBasicProduct,
    HalfDefinedPair,
    NonIdempotentProduct,
    NonAssociative,
    UnknownClass,
    UnknownLetter,
    NotRegular,
    ActionUndefined,
    ClassMismatch,
    BoundExceeded,
    UnknownBackend,
    BackendMismatch,
    InfiniteFixedSide,
    UnsupportedRegime,
    SizeLimit,
    Internal
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! Every failure raised by the library carries one of the codes above so
  //! callers (and the CLI) can report a machine-readable kind.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what);

    [[nodiscard]] ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

  [[noreturn]] void fail(ErrorCode code, std::string const& detail);

}  // namespace freeidem

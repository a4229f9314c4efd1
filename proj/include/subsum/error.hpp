#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subsum {

enum class ErrorCode {
    InvalidSpec,
    ParseError,
    IndexBeyondFinite,
    UnsupportedExponent,
    UnsupportedKind,
    CapExceeded,
    EmptyUnion,
    DepthLimit,
    NotDivergent,
    DivergentTail,
    IndeterminateComparison,
    WrongKind,
    NotDigitForm,
    NotApplicable,
    IoError,
    InvariantViolation,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace subsum

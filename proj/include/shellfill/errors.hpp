#pragma once

#include <stdexcept>
#include <string>

namespace shellfill {

enum class ErrorCode {
    InvalidArgument,
    Overflow,
    SameOrbit,
    LengthMismatch,
    EmptyArc,
    MixedDimension,
    NotInSupport,
    MissingLevel,
    DependentLevel,
    IncompatibleLevels,
    FaceMismatch,
    InconsistentSpec,
    InvalidSite,
    NotVanishing,
    VertexInUse,
    NotOneShellBoundary,
    HypothesisFails,
    NotRenameable,
    NotMinimal,
    BudgetExhausted,
    OutOfRange,
    TooLong,
    NotCentered,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace shellfill

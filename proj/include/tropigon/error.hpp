#pragma once

#include <stdexcept>
#include <string>

namespace tropigon {

enum class ErrorCode {
    ParityMismatch,
    MaroniRange,
    InvalidPolygon,
    Disconnected,
    GenusZero,
    NotCanonical,
    UnsupportedGenus,
    NonPositiveLength,
    NotRegular,
    NotSmooth,
    WrongPolygon,
    NotHarmonic,
    DegreeVaries,
    DegenerateVertex,
    ContractedLoop,
    LengthMismatch,
    RHViolated,
    UnknownType,
    BadMaroniParameter,
    BadDivisor,
    ForcedZeroViolated,
    NegativeLength,
    BadInput,
};

const char* error_name(ErrorCode code);

// Process exit status used by the command-line tool for each error.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tropigon

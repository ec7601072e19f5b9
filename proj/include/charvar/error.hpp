#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

enum class ErrorKind {
    NotPrime,
    TooLarge,
    ZeroElement,
    ElementNotInGroup,
    EvenQ,
    BadParams,
    BadGenus,
    UnsupportedRank,
    MissingTable,
    CongruenceViolated,
    NonIntegerResult,
    NonIntegerCoefficients,
    InexactDivision,
    InsufficientPoints,
    InconsistentPoints,
    ParseError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace charvar

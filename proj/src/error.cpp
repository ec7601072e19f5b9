#include "charvar/error.hpp"

namespace charvar {

const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorKind::EvenQ: return "EvenQ";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::MissingTable: return "MissingTable";
    case ErrorKind::CongruenceViolated: return "CongruenceViolated";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::InconsistentPoints: return "InconsistentPoints";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace charvar

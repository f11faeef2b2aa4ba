#include "compirr/error.hpp"

namespace compirr {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::ConstantInY: return "ConstantInY";
    case ErrorKind::ConstantInLastVariable: return "ConstantInLastVariable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::WrongField: return "WrongField";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::PNotIrreducible: return "PNotIrreducible";
    case ErrorKind::MissingEvidence: return "MissingEvidence";
    case ErrorKind::MissingOmega: return "MissingOmega";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::MixedArity: return "MixedArity";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string const & what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

ParseError::ParseError(ErrorKind kind, int line, int column, std::string expected)
    : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column)
                      + ": expected " + expected),
      line_(line), column_(column), expected_(std::move(expected))
{
}

}  // namespace compirr

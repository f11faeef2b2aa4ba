#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compirr {

enum class ErrorKind {
    CompositeModulus,
    InvalidDescriptor,
    DivisionByZero,
    MixedFields,
    BothZero,
    NotPrime,
    ConstantInput,
    ConstantInY,
    ConstantInLastVariable,
    IndexOutOfRange,
    ZeroInput,
    WrongField,
    BudgetExceeded,
    PreconditionViolated,
    NotADivisor,
    FactorizationMismatch,
    PNotIrreducible,
    MissingEvidence,
    MissingOmega,
    SyntaxError,
    UnknownVariable,
    MixedArity,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` identifies the contract
/// that was violated; the message carries the specifics.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string const & what);
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Raised by the polynomial parser. Positions are 1-based.
class ParseError : public Error {
  public:
    ParseError(ErrorKind kind, int line, int column, std::string expected);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    std::string const & expected() const noexcept { return expected_; }

  private:
    int line_;
    int column_;
    std::string expected_;
};

}  // namespace compirr

#pragma once

#include <stdexcept>
#include <string>

namespace autoseq {

/// Error categories surfaced by the library. Each maps to one named
/// failure mode of an operation contract.
enum class ErrorKind {
    CompositeP,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    ZeroSeries,
    ZeroDenominator,
    NotCharPower,
    KNotDividingR,
    GammaNotCoprime,
    ZeroAlpha,
    WrongCharacteristic,
    RNotCharPower,
    PrecisionTooLow,
    PrefixTooShort,
    KernelNotClosed,
    WrongR,
    NoNonzeroU,
    NotPeriodic,
    InvalidArgument,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace autoseq

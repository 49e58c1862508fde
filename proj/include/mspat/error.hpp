#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mspat {

enum class ErrorKind {
  InvalidPattern,
  InvalidPermutation,
  UnsupportedSymmetry,
  UnsupportedStatistic,
  BudgetExceeded,
  Unsupported,
  OutOfDomain,
  ArithmeticBug,
  UnknownRule,
  ExplosionGuard,
  InvalidDyck,
  InvalidLabelSequence,
  InvalidPath,
  NotInDomain,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPattern: return "InvalidPattern";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::UnsupportedSymmetry: return "UnsupportedSymmetry";
    case ErrorKind::UnsupportedStatistic: return "UnsupportedStatistic";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ArithmeticBug: return "ArithmeticBug";
    case ErrorKind::UnknownRule: return "UnknownRule";
    case ErrorKind::ExplosionGuard: return "ExplosionGuard";
    case ErrorKind::InvalidDyck: return "InvalidDyck";
    case ErrorKind::InvalidLabelSequence: return "InvalidLabelSequence";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::NotInDomain: return "NotInDomain";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` lets callers branch
/// without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mspat

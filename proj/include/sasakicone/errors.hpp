#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sasakicone {

enum class ErrorKind {
  ZeroPolynomial,
  InexactDivision,
  LogarithmicTerm,
  DomainError,
  SingularSystem,
  InternalInconsistency,
  InterpolationMismatch,
  WrongWeight,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::LogarithmicTerm: return "LogarithmicTerm";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InterpolationMismatch: return "InterpolationMismatch";
    case ErrorKind::WrongWeight: return "WrongWeight";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Base of every error raised by the library. The kind is also encoded in
/// the concrete subclass so callers can catch selectively.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SASAKICONE_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                      \
   public:                                                                         \
    explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {}       \
  };

SASAKICONE_DEFINE_ERROR(ZeroPolynomial)
SASAKICONE_DEFINE_ERROR(InexactDivision)
SASAKICONE_DEFINE_ERROR(LogarithmicTerm)
SASAKICONE_DEFINE_ERROR(DomainError)
SASAKICONE_DEFINE_ERROR(SingularSystem)
SASAKICONE_DEFINE_ERROR(InternalInconsistency)
SASAKICONE_DEFINE_ERROR(InterpolationMismatch)
SASAKICONE_DEFINE_ERROR(WrongWeight)
SASAKICONE_DEFINE_ERROR(ParseError)

#undef SASAKICONE_DEFINE_ERROR

}  // namespace sasakicone

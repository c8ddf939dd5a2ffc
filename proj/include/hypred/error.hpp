#pragma once

#include <stdexcept>
#include <string>

namespace hypred {

enum class ErrorKind {
  PoleAtEpsZero,
  UncancelledPole,
  SingularStep,
  NotIntegerShift,
  DegeneratePoles,
  CriterionViolation,
  NoFactorization,
  NotTriangular,
  UnsupportedClass,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleAtEpsZero: return "PoleAtEpsZero";
    case ErrorKind::UncancelledPole: return "UncancelledPole";
    case ErrorKind::SingularStep: return "SingularStep";
    case ErrorKind::NotIntegerShift: return "NotIntegerShift";
    case ErrorKind::DegeneratePoles: return "DegeneratePoles";
    case ErrorKind::CriterionViolation: return "CriterionViolation";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::UnsupportedClass: return "UnsupportedClass";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace hypred

#pragma once

#include <stdexcept>
#include <string>

namespace biham {

enum class ErrorKind {
  Parse,
  Validation,
  DimensionMismatch,
  PoleAtPoint,
  SingularInversion,
  NotSkewCanonical,
  NotPureKronecker,
  InternalInconsistency,
  UnsupportedPeriod,
  DegenerateFunction,
  DegenerateModel,
  NotRegular,
  NotNormalizable,
  SingularODE,
  SamplingExhausted,
  UnknownModel,
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

}  // namespace biham

#pragma once

#include <stdexcept>
#include <string>

namespace hydro {

enum class ErrorKind {
  InvalidGrid,
  Constraint,
  Scale,
  Fit,
  UnsupportedOrder,
  Parameter,
  Calibration,
  BlowUp,
  InsufficientData,
  TestFunction,
  IncompleteInput,
  Io,
};

const char* to_string(ErrorKind kind);

/// Process exit code used by the CLI for each error kind.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace hydro

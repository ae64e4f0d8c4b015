#include "hydro/error.hpp"

namespace hydro {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::Constraint: return "constraint-violation";
    case ErrorKind::Scale: return "scale";
    case ErrorKind::Fit: return "fit";
    case ErrorKind::UnsupportedOrder: return "unsupported-order";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Calibration: return "generator-calibration";
    case ErrorKind::BlowUp: return "blow-up";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::TestFunction: return "test-function";
    case ErrorKind::IncompleteInput: return "incomplete-input";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BlowUp: return 3;
    case ErrorKind::Constraint: return 4;
    case ErrorKind::Io: return 5;
    default: return 2;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hydro

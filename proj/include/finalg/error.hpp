#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

// Every failure the library can raise, from order-theoretic defects found
// while building a lattice up to parser diagnostics. CLI exit codes are
// derived from this classification (see cli.hpp).
enum class ErrorKind {
  NotALattice,
  NotBounded,
  CycleInOrder,
  SignatureMismatch,
  SizeBound,
  DenseCharacterizationMismatch,
  PositiveCharacterizationMismatch,
  NotASubalgebra,
  ProjectionNotOnto,
  NotAnIFilter,
  NotACongruence,
  MultipleCenters,
  NotBijective,
  Parse,
  UnknownElement,
  ArityMismatch,
  DuplicateOp,
  InvalidArgument,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::CycleInOrder: return "CycleInOrder";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::DenseCharacterizationMismatch:
      return "DenseCharacterizationMismatch";
    case ErrorKind::PositiveCharacterizationMismatch:
      return "PositiveCharacterizationMismatch";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::ProjectionNotOnto: return "ProjectionNotOnto";
    case ErrorKind::NotAnIFilter: return "NotAnIFilter";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::MultipleCenters: return "MultipleCenters";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DuplicateOp: return "DuplicateOp";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parser diagnostic with a 1-based source position. Also used for the
// position-carrying kinds UnknownElement / ArityMismatch / DuplicateOp.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int col, const std::string& msg)
      : Error(kind, "line " + std::to_string(line) + ":" +
                        std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Errors caused by malformed input files or bad invocations, as opposed to
// mathematical counterexamples found in well-formed input.
inline bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownElement:
    case ErrorKind::ArityMismatch:
    case ErrorKind::DuplicateOp:
    case ErrorKind::SignatureMismatch:
    case ErrorKind::SizeBound:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotALattice:
    case ErrorKind::NotBounded:
    case ErrorKind::CycleInOrder:
      return true;
    default:
      return false;
  }
}

}  // namespace finalg

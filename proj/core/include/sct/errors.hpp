#pragma once

#include <stdexcept>
#include <string>

namespace sct {

// Every failure mode raised by the library.  CLI exit codes group these:
// input/validation problems, negative mathematical answers (reported via
// optional returns, not exceptions), and internal invariant violations
// (conditions that are provably impossible for valid sphere inputs and
// therefore indicate a bug or a non-sphere complex that slipped past
// validation).
enum class ErrorCode {
  // complex validation
  MalformedChamber,
  DuplicateChamber,
  NotPseudomanifold,
  DisconnectedDual,
  BadLink,
  DimensionOutOfRange,
  WrongDimension,
  NotACell,
  NonOrientable,
  UnknownVertex,
  MalformedComplex,
  // walks and gains
  NotAWalk,
  NotClosed,
  Unbalanced,
  // colouring preconditions
  PreconditionViolated,
  WrongColourCount,
  NotProper,
  UnsupportedSize,
  NotAPathColouring,
  LinkNotFourColourable,
  OddOrder,
  OddColourCount,
  // generators
  TooFewVertices,
  UnknownFamily,
  BadParams,
  // serialization
  ParseError,
  // provably impossible situations; indicate a bug or invalid input
  InternalUnbalanced,
  InternalInvariant,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // True for conditions that can only arise from a bug or from input that is
  // not actually a sphere triangulation (validation is approximate).
  bool is_internal() const {
    return code_ == ErrorCode::InternalUnbalanced ||
           code_ == ErrorCode::InternalInvariant;
  }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedChamber: return "MalformedChamber";
    case ErrorCode::DuplicateChamber: return "DuplicateChamber";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::DisconnectedDual: return "DisconnectedDual";
    case ErrorCode::BadLink: return "BadLink";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotACell: return "NotACell";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::MalformedComplex: return "MalformedComplex";
    case ErrorCode::NotAWalk: return "NotAWalk";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongColourCount: return "WrongColourCount";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::NotAPathColouring: return "NotAPathColouring";
    case ErrorCode::LinkNotFourColourable: return "LinkNotFourColourable";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::OddColourCount: return "OddColourCount";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalUnbalanced: return "InternalUnbalanced";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

}  // namespace sct

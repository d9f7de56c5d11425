#pragma once

#include <stdexcept>
#include <string>

namespace symcubic {

enum class ErrorKind {
  NonPrime,
  DegreeOutOfRange,
  DivisionByZero,
  FieldMismatch,
  NotASubfield,
  CharacteristicDivides,
  ZeroPolynomial,
  DegenerateFrame,
  WrongOrder,
  UnknownName,
  SearchTooLarge,
  NotDiagonal,
  PlaneInsideSurface,
  SurfaceSingular,
  SplittingDegreeExceeded,
  ConfigIncomplete,
  NotAnAutomorphismOfGraph,
  MarkingInconsistent,
  UnmarkedConfig,
  NoFrameFound,
  NotClosed,
  MissingFourthRoot,
  UnknownCase,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace symcubic

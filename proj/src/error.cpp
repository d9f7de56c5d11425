#include "symcubic/error.hpp"

namespace symcubic {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::CharacteristicDivides: return "CharacteristicDivides";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::PlaneInsideSurface: return "PlaneInsideSurface";
    case ErrorKind::SurfaceSingular: return "SurfaceSingular";
    case ErrorKind::SplittingDegreeExceeded: return "SplittingDegreeExceeded";
    case ErrorKind::ConfigIncomplete: return "ConfigIncomplete";
    case ErrorKind::NotAnAutomorphismOfGraph: return "NotAnAutomorphismOfGraph";
    case ErrorKind::MarkingInconsistent: return "MarkingInconsistent";
    case ErrorKind::UnmarkedConfig: return "UnmarkedConfig";
    case ErrorKind::NoFrameFound: return "NoFrameFound";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::MissingFourthRoot: return "MissingFourthRoot";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

} // namespace symcubic

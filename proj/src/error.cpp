#include "jordanlab/error.hpp"

namespace jordanlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DegenerateGram: return "DegenerateGram";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotAnEffect: return "NotAnEffect";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace jordanlab

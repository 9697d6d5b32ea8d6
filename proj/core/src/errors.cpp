#include "rangeloc/errors.hpp"

namespace rangeloc {

const char* to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::DuplicateReceiver: return "DuplicateReceiver";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::DegenerateConfig: return "DegenerateConfig";
  case ErrorCode::NotCollinear: return "NotCollinear";
  case ErrorCode::AtReceiver: return "AtReceiver";
  case ErrorCode::Infeasible: return "Infeasible";
  case ErrorCode::UnknownLabel: return "UnknownLabel";
  case ErrorCode::NotANode: return "NotANode";
  case ErrorCode::InvalidParam: return "InvalidParam";
  case ErrorCode::NotOnBoundary: return "NotOnBoundary";
  }
  return "Unknown";
}

} // namespace rangeloc

#pragma once

#include <stdexcept>
#include <string>

namespace rangeloc {

enum class ErrorCode {
  DuplicateReceiver,
  DimensionMismatch,
  InvalidArgument,
  DegenerateConfig,
  NotCollinear,
  AtReceiver,
  Infeasible,
  UnknownLabel,
  NotANode,
  InvalidParam,
  NotOnBoundary,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace rangeloc

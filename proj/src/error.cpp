/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/error.hpp"

namespace orthosat {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument:
    return "invalid argument";
  case ErrorCode::Parse:
    return "parse error";
  case ErrorCode::IterationCap:
    return "iteration cap exceeded";
  case ErrorCode::Infeasible:
    return "infeasible";
  case ErrorCode::Io:
    return "i/o error";
  case ErrorCode::Internal:
    return "internal error";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

} // namespace orthosat

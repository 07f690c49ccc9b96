#pragma once

#include <stdexcept>
#include <string>

namespace hpdesign {

enum class ErrorCode {
  BadToken,
  TooShort,
  SelfIntersection,
  BoundExceeded,
  LengthMismatch,
  BadLambda,
  BadComposition,
  NoValidInstance,
  DimensionMismatch,
  ArityMismatch,
  BadVariant,
  BadLayers,
  BadConfig,
  IoError,
};

/// All library errors are thrown as Error; code() distinguishes them for
/// callers that map errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hpdesign

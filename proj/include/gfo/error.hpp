#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfo {

enum class ErrorKind {
  ZeroOrNegativeDuration,
  OutOfExtent,
  OutOfLifetime,
  NotASubinterval,
  UnsampledTime,
  UnknownEntity,
  UnknownProperty,
  UnknownSituation,
  MalformedContinuant,
  MalformedTriple,
  BadRational,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable kind. Operations on the model
/// throw this; checks that find violations return them as data instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gfo

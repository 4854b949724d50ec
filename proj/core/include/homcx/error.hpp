#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcx {

enum class ErrorCode {
  InvalidGraph,
  InvalidWalk,
  NotConnected,
  SourceTargetMismatch,
  NotHomomorphism,
  NotClosed,
  NotNeighbor,
  TransportMismatch,
  EndpointMismatch,
  NotValid,
  ExplosionGuard,
  NoSink,
  NotInFiber,
  NotInDomain,
  OutOfWindow,
  NotSquareFree,
  EmptyHomSet,
  InvariantViolation,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace homcx

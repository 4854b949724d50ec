#include "homcx/error.hpp"

namespace homcx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidWalk: return "InvalidWalk";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotNeighbor: return "NotNeighbor";
    case ErrorCode::TransportMismatch: return "TransportMismatch";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotValid: return "NotValid";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::NoSink: return "NoSink";
    case ErrorCode::NotInFiber: return "NotInFiber";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::EmptyHomSet: return "EmptyHomSet";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace homcx

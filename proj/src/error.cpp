#include "psg/error.hpp"

namespace psg {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSimple: return "NonSimple";
    case ErrorCode::InconsistentRotation: return "InconsistentRotation";
    case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::BadOuterHint: return "BadOuterHint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::BridgeDeletion: return "BridgeDeletion";
    case ErrorCode::NotACircle: return "NotACircle";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NonPolygonalFace: return "NonPolygonalFace";
    case ErrorCode::NotOuterplane: return "NotOuterplane";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::AlreadyOuterBoundary: return "AlreadyOuterBoundary";
    case ErrorCode::NoHamiltonianCircle: return "NoHamiltonianCircle";
    case ErrorCode::NotHamiltonian: return "NotHamiltonian";
    case ErrorCode::NotOnOuterBoundary: return "NotOnOuterBoundary";
    case ErrorCode::NotTwoConnectedAfter: return "NotTwoConnectedAfter";
    case ErrorCode::FinalHasInteriorVertex: return "FinalHasInteriorVertex";
    case ErrorCode::FinalNotUniquelyHamiltonian: return "FinalNotUniquelyHamiltonian";
    case ErrorCode::InvalidSet: return "InvalidSet";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::BadSymmetricDifference: return "BadSymmetricDifference";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::BadPreconditions: return "BadPreconditions";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotHamiltonianAfterToggle: return "NotHamiltonianAfterToggle";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> step)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      step_(step) {}

}  // namespace psg

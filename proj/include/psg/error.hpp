#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psg {

enum class ErrorCode {
  NonSimple,
  InconsistentRotation,
  NonPlanarEmbedding,
  BadOuterHint,
  UnknownVertex,
  UnknownEdge,
  BridgeDeletion,
  NotACircle,
  TooSmall,
  NonPolygonalFace,
  NotOuterplane,
  NotTwoConnected,
  AlreadyOuterBoundary,
  NoHamiltonianCircle,
  NotHamiltonian,
  NotOnOuterBoundary,
  NotTwoConnectedAfter,
  FinalHasInteriorVertex,
  FinalNotUniquelyHamiltonian,
  InvalidSet,
  OddN,
  LimitExceeded,
  BadSymmetricDifference,
  BadDimensions,
  BadPreconditions,
  OutOfRange,
  NotHamiltonianAfterToggle,
  InvalidConfig,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every library operation. `step()` carries the
/// 1-based sequence position for the step-indexed co-Hamiltonian errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> step = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> step_;
};

}  // namespace psg

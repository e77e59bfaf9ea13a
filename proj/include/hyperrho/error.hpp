#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperrho {

enum class Errc {
  EdgeWrongSize,
  VertexOutOfRange,
  DuplicateEdge,
  SyntaxError,
  Disconnected,
  InvalidAlpha,
  DimensionMismatch,
  NegativeEntry,
  NotKUnit,
  NoConvergence,
  InvalidDegrees,
  StaleCertificate,
  RegularInput,
  VertexInEdge,
  VertexNotInEdge,
  EdgeCollision,
  OverlappingEdges,
  SizeMismatch,
  DegreePatternViolated,
  InvalidParams,
  ScaleExceeded,
  MonotonicityViolation,
  ExtremalMismatch,
  ChainViolation,
};

std::string_view errc_name(Errc code) noexcept;

// Every library failure is reported through this type; `code()` tells the
// caller which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperrho

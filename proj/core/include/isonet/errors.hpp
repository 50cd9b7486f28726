#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isonet {

enum class ErrorKind {
  InvalidInput,
  DegenerateReference,
  DimensionMismatch,
  NotOnQuadric,
  DegenerateEdge,
  DegenerateFace,
  NotIsothermic,
  NotKoenigs,
  NonClosed,
  MissingOrigin,
  IsotropicFiber,
  NotInConcentricFamily,
  SelfDual,
  NonConstantPairing,
  NullEdge,
  NonConstantH,
  NoDualInSpaceForm,
  InvalidSpec,
};

std::string_view to_string(ErrorKind kind);

/// Failure of a geometric precondition or verdict. Carries the offending
/// location (face/edge/vertex, formatted) and the residual that tripped it
/// when one exists.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message,
                std::string location = {},
                std::optional<double> residual = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::string location_;
  std::optional<double> residual_;
};

}  // namespace isonet

#include "isonet/errors.hpp"

#include <utility>

namespace isonet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateReference: return "DegenerateReference";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotOnQuadric: return "NotOnQuadric";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::NotIsothermic: return "NotIsothermic";
    case ErrorKind::NotKoenigs: return "NotKoenigs";
    case ErrorKind::NonClosed: return "NonClosed";
    case ErrorKind::MissingOrigin: return "MissingOrigin";
    case ErrorKind::IsotropicFiber: return "IsotropicFiber";
    case ErrorKind::NotInConcentricFamily: return "NotInConcentricFamily";
    case ErrorKind::SelfDual: return "SelfDual";
    case ErrorKind::NonConstantPairing: return "NonConstantPairing";
    case ErrorKind::NullEdge: return "NullEdge";
    case ErrorKind::NonConstantH: return "NonConstantH";
    case ErrorKind::NoDualInSpaceForm: return "NoDualInSpaceForm";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message,
                    const std::string& location) {
  std::string out(to_string(kind));
  out += ": ";
  out += message;
  if (!location.empty()) {
    out += " [at ";
    out += location;
    out += "]";
  }
  return out;
}

}  // namespace

GeometryError::GeometryError(ErrorKind kind, const std::string& message,
                             std::string location,
                             std::optional<double> residual)
    : std::runtime_error(compose(kind, message, location)),
      kind_(kind),
      location_(std::move(location)),
      residual_(residual) {}

}  // namespace isonet

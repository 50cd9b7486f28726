#pragma once

// Koenigs nets: mixed areas, the coplanarity test, Moutard lifts and the
// Christoffel dual.

#include <optional>

#include "isonet/errors.hpp"
#include "isonet/minkowski.hpp"
#include "isonet/quadnet.hpp"

namespace isonet {

/// A(a,b) = 1/4 (da_ik ^ db_jl + db_ik ^ da_jl) on one face.
BiVec mixed_area(const QuadNet& a, const QuadNet& b, FaceIndex f);

/// Intersection of the two diagonal lines of a face, p = s_i + a ds_ik =
/// s_j + b ds_jl in the least-squares sense. `gap` is the distance of the two
/// closest points relative to the diagonal lengths (0 for planar faces).
struct DiagonalIntersection {
  double a = 0.0;
  double b = 0.0;
  MVec point;
  double gap = 0.0;
};

/// Throws DegenerateFace for a zero-length or parallel pair of diagonals.
DiagonalIntersection diagonal_intersection(const QuadNet& net, FaceIndex f);

/// At every interior vertex, tests that the diagonal intersection points of
/// the four incident faces span at most a plane. Residual: third singular
/// value ratio of the four points.
CheckReport koenigs_test(const QuadNet& net, double tol = kCheckTol);

/// Christoffel symbol nu with mu = s_hat / nu a Moutard lift, where s_hat is
/// the homogeneous lift of the net's affine span.
struct NuField {
  Grid<double> values;
  double residual = 0.0;
};

enum class TreeOrder { RowMajor, ColumnMajor };

/// Per face, the diagonal intersection parameters fix nu_k/nu_i and
/// nu_l/nu_j; these are propagated over a spanning tree of each diagonal
/// sublattice from nu(0,0) = nu(1,0) = 1. The residual is the worst
/// parallelism violation |dmu_ik ^ dmu_jl| / (|dmu_ik| |dmu_jl|) over all faces.
/// Throws NotKoenigs if residual > tol.
NuField moutard_lift(const QuadNet& net, double tol = kCheckTol,
                     TreeOrder order = TreeOrder::RowMajor);

struct DualResult {
  QuadNet dual;
  MVec base;
  double closure_residual = 0.0;
};

class NonClosedError : public GeometryError {
 public:
  NonClosedError(DualResult result, std::string location);
  const DualResult& result() const noexcept { return result_; }

 private:
  DualResult result_;
};

/// Integrates ds*_ij = ds_ij / (nu_i nu_j) from vertex (0,0), placed at
/// `base` (default: the net's own vertex (0,0)), along row n = 0 and then up
/// each column. The closure residual is the worst face circulation relative
/// to the mean length of its four dual edges; throws NonClosedError (with the
/// integrated net attached) if it exceeds tol.
DualResult christoffel_dual(const QuadNet& net, const NuField& nu,
                            std::optional<MVec> base = std::nullopt,
                            double tol = kCheckTol);

struct DualPairReport {
  double tolerance = 0.0;
  CheckReport edge_parallel;      // |da ^ db| / (|da| |db|) per edge
  CheckReport mixed_area;         // |A(a,b)| / (|A(a,a)| + |A(b,b)|)/2 per face
  CheckReport diagonal_parallel;  // non-corresponding diagonals per face
  double pairing_min = 0.0;       // range of (a, b) over vertices
  double pairing_max = 0.0;
  bool criteria_agree = true;     // mixed-area verdict == diagonal verdict
  bool passed = false;

  double pairing_spread() const { return pairing_max - pairing_min; }
};

DualPairReport check_dual_pair(const QuadNet& a, const QuadNet& b,
                               double tol = kCheckTol);

struct RoundTripReport {
  double tolerance = 0.0;
  double scale = 0.0;  // fitted homothety factor
  MVec translation;
  double relative_error = 0.0;
  bool passed = false;
};

/// Dualizes twice and fits s** ~ scale * s + translation.
RoundTripReport dualize_twice(const QuadNet& net, double tol = kCheckTol);

}  // namespace isonet

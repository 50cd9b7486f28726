#pragma once

// Constant-curvature quadrics Q = {(y,y)=0, (y,q)=1} in R^{4,1}, their
// concentric family Q_{r,t} = {(y,q)=r, (y,y)=t}, Gauss maps and mixed-area
// curvatures, the mean-curvature sphere congruence and the placement of
// Koenigs duals.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isonet/minkowski.hpp"
#include "isonet/quadnet.hpp"

namespace isonet {

using Vec3 = std::array<double, 3>;

/// The datum q of a quadric of constant curvature kappa = -(q,q), with an
/// optional origin o ((o,o) = 0, (o,q) = 1) used by the Euclidean chart.
class SpaceForm {
 public:
  explicit SpaceForm(const MVec& q, std::optional<MVec> origin = std::nullopt);

  /// q = (0,0,0,1,-1), o = (0,0,0,1/2,1/2); the chart is span(e1,e2,e3).
  static SpaceForm euclidean();
  /// q = e5, kappa = 1: Q is the unit 3-sphere of {x5 = -1}.
  static SpaceForm spherical();
  /// q = e4, kappa = -1.
  static SpaceForm hyperbolic();
  /// q scaled so that -(q,q) = kappa; a Euclidean chart for kappa = 0.
  static SpaceForm with_curvature(double kappa);

  const MVec& q() const { return q_; }
  double kappa() const { return -inner(q_, q_); }
  const std::optional<MVec>& origin() const { return origin_; }

  bool is_flat() const;

  /// c_r = r q / (q,q); requires a non-flat space form.
  MVec center(double r) const;

  /// Orthonormal basis of {o,q}^perp. Throws MissingOrigin.
  const std::array<MVec, 3>& chart_basis() const;

 private:
  MVec q_;
  std::optional<MVec> origin_;
  std::array<MVec, 3> chart_{};
};

struct ConcentricParams {
  double r = 0.0;
  double t = 0.0;
};

/// Validates (r,t) for the given space form. When (q,q) < 0 we need
/// t (q,q) < r^2; the singular quadric r^2 + t kappa = 0 of a non-flat space
/// form is only accepted with allow_singular.
ConcentricParams make_concentric(double r, double t, const SpaceForm& sf,
                                 bool allow_singular = false);

/// s = o + x - (x,x)/2 q. Throws MissingOrigin, or InvalidInput if not flat.
MVec lift_euclidean(const Vec3& x, const SpaceForm& sf);

/// The {o,q}^perp component x of s = r o + x + (t - (x,x))/(2r) q.
/// Throws IsotropicFiber when (s,q) = 0.
Vec3 chart_project(const MVec& s, const SpaceForm& sf);

struct QuadricMembership {
  ConcentricParams params;  // vertex means of (s,q) and (s,s)
  double r_spread = 0.0;
  double t_spread = 0.0;
  double tolerance = 0.0;
};

/// Checks that (s,q) and (s,s) are constant over the vertices; throws
/// NotInConcentricFamily otherwise. Spreads are relative to max(1, |mean|).
QuadricMembership quadric_membership(const QuadNet& net, const SpaceForm& sf,
                                     double tol = kCheckTol);

struct EdgeCurvatures {
  EdgeForm<double> k;         // edge principal curvatures
  EdgeForm<double> residual;  // |dn + k ds| / |ds|
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// k_ij = -(dn, ds) / (ds, ds). Throws NullEdge on isotropic or zero edges.
EdgeCurvatures edge_principal_curvatures(const QuadNet& s, const QuadNet& n,
                                         double tol = kCheckTol);

/// Unit normal field n with n in T_s Q = {s,q}^perp, edge-parallel to s.
struct GaussMap {
  QuadNet normals;
  EdgeCurvatures curvatures;
};

/// Verifies (n,n) = 1, (n,s) = 0, (n,q) = 0 and computes edge curvatures.
GaussMap make_gauss_map(const QuadNet& s, QuadNet normals, const SpaceForm& sf,
                        double tol = kCheckTol);

struct CurvatureReport {
  double kappa = 0.0;
  Grid<double> H;
  Grid<double> K;
  Grid<double> h_residual;  // proportionality misfit of A(n,s) vs A(s,s)
  Grid<double> k_residual;  // proportionality misfit of A(n,n) vs A(s,s)
  Grid<double> lawson;      // H^2 + kappa
  double h_min = 0.0, h_max = 0.0, h_mean = 0.0;
  double k_min = 0.0, k_max = 0.0, k_mean = 0.0;
  double max_h_residual = 0.0;
  double max_k_residual = 0.0;

  double h_spread() const { return h_max - h_min; }
};

/// Per face: A(n,n) = K A(s,s) and A(n,s) = -H A(s,s). Throws DegenerateFace
/// when A(s,s) vanishes.
CurvatureReport face_curvatures(const QuadNet& s, const QuadNet& n,
                                const SpaceForm& sf);

/// Gauss map induced by a Koenigs dual in a concentric quadric: the tangent
/// congruence t = s* + ((s,s*)(q,q) - r) s - (s,s*) q normalized.
struct TangentCongruence {
  GaussMap gauss;
  Grid<MVec> tangent;
  double H = 0.0;
  double pairing = 0.0;  // (s, s*)
  double pairing_spread = 0.0;
  double tangent_norm_sq = 0.0;  // (t, t)
  double tangent_norm_spread = 0.0;
  ConcentricParams dual_quadric;
};

/// Requires s in Q = Q_{1,0} and s* in some Q_{r,t}. Throws SelfDual if
/// (t,t) < tol (scaled by the size of s*), NonConstantPairing if (s,s*)
/// varies.
TangentCongruence gauss_from_dual(const QuadNet& s, const QuadNet& dual,
                                  const SpaceForm& sf, double tol = kCheckTol);

struct SphereCongruence {
  QuadNet z;
  double H = 0.0;
  double norm_residual = 0.0;         // max |(z,z) - 1|
  double q_residual = 0.0;            // max |(z,q) - H|
  double mixed_area_residual = 0.0;   // max |A(z,s)| / |A(s,s)|
};

/// z = n + H s. Verifies (z,z) = 1, (z,q) = H and A(z,s) = 0 to tol.
SphereCongruence mean_curvature_sphere(const QuadNet& s, const QuadNet& n,
                                       double H, const SpaceForm& sf,
                                       double tol = kCheckTol);

/// As above with H taken from a curvature report; throws NonConstantH if the
/// face values spread by more than tol * max(1, |H|).
SphereCongruence mean_curvature_sphere(const QuadNet& s, const QuadNet& n,
                                       const CurvatureReport& curvature,
                                       const SpaceForm& sf,
                                       double tol = kCheckTol);

struct DualPlacement {
  QuadNet dual;
  double lambda = 0.0;
  double mu = 0.0;
  ConcentricParams predicted;
  ConcentricParams measured;
  /// For two-sheeted targets (kappa < 0, r^2 + t kappa > 0): +1/-1 sheet of
  /// every vertex relative to the time orientation of hyperbolic_sheet().
  std::vector<int> sheets;
};

/// s* = lambda z + mu q in Q_{r,t} with r = lambda H - mu kappa and
/// t = lambda^2 + 2 lambda mu H - mu^2 kappa; the measured (r,t) must agree
/// with the prediction to tol.
DualPlacement dual_family(const QuadNet& z, const SpaceForm& sf, double lambda,
                          double mu, double H, double tol = kAssertTol,
                          bool allow_singular = false);

enum class Branch { Plus, Minus, Closest };

struct SpaceFormDual {
  DualPlacement placement;
  int sign = 1;
  double predicted_distance_sq = 0.0;  // squared chordal distance to s
};

/// Places the dual back into Q = Q_{1,0}. Non-flat: s* = +-(z + H/kappa q) /
/// sqrt(H^2+kappa) - q/kappa, at squared chordal distance
/// (2/kappa)(1 -+ H/sqrt(H^2+kappa)). Flat: s* = (z - q/(2H))/H at distance
/// 1/|H| (single branch). Throws NoDualInSpaceForm when H^2 + kappa <= 0.
SpaceFormDual place_in_space_form(const QuadNet& z, const SpaceForm& sf,
                                  double H, Branch branch = Branch::Closest,
                                  double tol = kAssertTol);

/// +1 or -1 according to the time orientation of y - c_r, for kappa < 0.
int hyperbolic_sheet(const MVec& y, const SpaceForm& sf);

enum class Regime {
  SphericalPair,
  EuclideanCMC,
  HyperbolicTwoSheeted,
  EuclideanMinimal_IsotropicCylinder,
  Horospherical_LightCone,
  Hyperbolic_OneSheeted,
};

struct RegimeInfo {
  Regime regime;
  std::string_view name;
  std::string_view case_label;
  std::string_view target_quadric;

  std::string label() const;  // "name case_label"
};

/// Case split on sign(H^2 + kappa), sign(kappa); |x| <= eps counts as zero.
RegimeInfo classify_regime(double H, double kappa, double eps = 0.0);

struct SteinerReport {
  double tolerance = 0.0;
  std::vector<double> offsets;
  std::vector<double> max_residual;     // per offset, over faces
  std::vector<double> min_polynomial;   // per offset, min of 1 - 2Ht + Kt^2
  std::vector<double> max_polynomial;
  bool passed = false;
};

/// |A(s+tn, s+tn) - (1 - 2Ht + Kt^2) A(s,s)| / |A(s,s)| per face and offset.
SteinerReport steiner_check(const QuadNet& s, const QuadNet& n,
                            const CurvatureReport& curvature,
                            std::span<const double> offsets,
                            double tol = kAssertTol);

struct IndexShift {
  int dm = 0;
  int dn = 0;
  int sign = 1;  // -1: antipodal image of the shifted net
};

struct SelfDualityReport {
  double tolerance = 0.0;
  double pointwise_tangent_norm_sq = 0.0;  // max (t,t) for the pair (s, s*)
  bool pointwise = false;
  std::optional<IndexShift> shift;           // first shift with t identically 0
  double shift_tangent_norm_sq = 0.0;
};

/// Searches for an index shift (and, for kappa != 0, an antipodal sign) under
/// which the tangent congruence of (shifted s, s*) vanishes identically, i.e.
/// s*_{m,n} = +-s_{m+dm,n+dn} up to homothety and translation.
SelfDualityReport detect_self_duality(const QuadNet& s, const QuadNet& dual,
                                      const SpaceForm& sf,
                                      double tol = kAssertTol);

}  // namespace isonet

#pragma once

// Closed-form example nets and reproducible perturbations.

#include <cstdint>
#include <optional>
#include <vector>

#include "isonet/quadnet.hpp"
#include "isonet/spaceform.hpp"

namespace isonet {

/// Clifford torus data: s = (e^{i phi} cos alpha, e^{i psi} sin alpha) in
/// C^2 = R^4, with optional periods phi(m + m0) = phi(m) + 2 pi.
struct TorusSpec {
  double alpha = 0.0;
  std::vector<double> phi;
  std::vector<double> psi;
  std::optional<int> m0;
  std::optional<int> n0;

  /// Throws InvalidSpec.
  void validate() const;

  /// m0 + 1 and n0 + 1 equally spaced angles covering one period each.
  static TorusSpec uniform(double alpha, int m0, int n0);
  /// One period each, with positive steps drawn deterministically from seed.
  static TorusSpec random_steps(double alpha, int m0, int n0, std::uint64_t seed);
  /// As random_steps, but the phi steps repeat after half a period so that
  /// phi(m + m0/2) = phi(m) + pi. Requires even m0.
  static TorusSpec half_period(double alpha, int m0, int n0, std::uint64_t seed);
};

/// A net in a space form with its Gauss map.
struct SpaceFormNet {
  QuadNet s;
  QuadNet normals;
  SpaceForm sf;
};

/// The light-cone lift s - q (q = e5) of the torus and the normal
/// n = (-e^{i phi} sin alpha, e^{i psi} cos alpha).
SpaceFormNet clifford_torus(const TorusSpec& spec);

/// The closed-form dual +-(sin 2alpha n - cos 2alpha s), lifted by -q.
QuadNet clifford_dual(const TorusSpec& spec, int sign = 1);

/// Cylinder x = R (cos theta_m, sin theta_m, 0) + (0, 0, h_n) in the
/// Euclidean space form, with outward normal g lifted as n = g - (g,x) q.
SpaceFormNet euclidean_cylinder(double radius, const std::vector<double>& angles,
                                const std::vector<double>& heights);

/// s(m,n) = f(m) + g(n) in the affine 4-space {x4 = 0, x5 = 1}.
QuadNet translational_net(const std::vector<Vec3>& f, const std::vector<Vec3>& g);

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based uniform draw in [0, 1):
/// (splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15) >> 11) * 2^-53.
double counter_uniform(std::uint64_t seed, std::uint64_t index);

enum class PerturbConstraint { Free, OnLightCone };

/// Displaces vertex v by epsilon * L * u, L the mean edge length and u with
/// components (2 U(5 v + c) - 1) / sqrt(5), so |u| < 1. OnLightCone then
/// projects back to (y,y) = 0 with (y,q) unchanged; it needs sf.
QuadNet perturb(const QuadNet& net, double epsilon, std::uint64_t seed,
                PerturbConstraint constraint = PerturbConstraint::Free,
                const std::optional<SpaceForm>& sf = std::nullopt);

}  // namespace isonet

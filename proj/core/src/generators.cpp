#include "isonet/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "isonet/errors.hpp"

namespace isonet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPeriodTol = 1e-9;

void require_increasing(const std::vector<double>& x, const char* name) {
  if (x.size() < 2) {
    throw GeometryError(ErrorKind::InvalidSpec,
                        std::string(name) + " needs at least two values");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw GeometryError(ErrorKind::InvalidSpec,
                          std::string(name) + " must be finite");
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw GeometryError(ErrorKind::InvalidSpec,
                          std::string(name) + " must be strictly increasing at index " +
                              std::to_string(i));
    }
  }
}

void require_period(const std::vector<double>& x, const std::optional<int>& p,
                    const char* name) {
  if (!p) return;
  if (*p < 1) {
    throw GeometryError(ErrorKind::InvalidSpec,
                        std::string(name) + " period must be positive");
  }
  const auto period = static_cast<std::size_t>(*p);
  for (std::size_t i = 0; i + period < x.size(); ++i) {
    if (std::abs(x[i + period] - x[i] - kTwoPi) > kPeriodTol) {
      throw GeometryError(ErrorKind::InvalidSpec,
                          std::string(name) + " violates its declared period at index " +
                              std::to_string(i));
    }
  }
}

std::vector<double> uniform_angles(int period) {
  std::vector<double> out(static_cast<std::size_t>(period) + 1);
  for (int i = 0; i <= period; ++i) out[static_cast<std::size_t>(i)] = kTwoPi * i / period;
  return out;
}

// Positive steps in [0.5, 1.5), cumulated and rescaled to total `span`.
std::vector<double> random_angles(int count, double span, std::uint64_t seed,
                                  std::uint64_t stream) {
  std::vector<double> steps(static_cast<std::size_t>(count));
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    const double w =
        0.5 + counter_uniform(seed ^ (stream * 0xD1B54A32D192ED03ULL),
                              static_cast<std::uint64_t>(i));
    steps[static_cast<std::size_t>(i)] = w;
    total += w;
  }
  std::vector<double> out(static_cast<std::size_t>(count) + 1, 0.0);
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i) + 1] =
        out[static_cast<std::size_t>(i)] + steps[static_cast<std::size_t>(i)] * span / total;
  }
  out.back() = span;
  return out;
}

void require_period_count(int p, const char* name) {
  if (p < 1) {
    throw GeometryError(ErrorKind::InvalidSpec,
                        std::string(name) + " must be positive");
  }
}

}  // namespace

void TorusSpec::validate() const {
  if (!(alpha > 0.0 && alpha < std::numbers::pi / 2)) {
    throw GeometryError(ErrorKind::InvalidSpec, "alpha must lie in (0, pi/2)");
  }
  require_increasing(phi, "phi");
  require_increasing(psi, "psi");
  require_period(phi, m0, "phi");
  require_period(psi, n0, "psi");
}

TorusSpec TorusSpec::uniform(double alpha, int m0, int n0) {
  require_period_count(m0, "m0");
  require_period_count(n0, "n0");
  TorusSpec spec{alpha, uniform_angles(m0), uniform_angles(n0), m0, n0};
  spec.validate();
  return spec;
}

TorusSpec TorusSpec::random_steps(double alpha, int m0, int n0, std::uint64_t seed) {
  require_period_count(m0, "m0");
  require_period_count(n0, "n0");
  TorusSpec spec{alpha, random_angles(m0, kTwoPi, seed, 1),
                 random_angles(n0, kTwoPi, seed, 2), m0, n0};
  spec.validate();
  return spec;
}

TorusSpec TorusSpec::half_period(double alpha, int m0, int n0, std::uint64_t seed) {
  require_period_count(n0, "n0");
  if (m0 < 2 || m0 % 2 != 0) {
    throw GeometryError(ErrorKind::InvalidSpec, "half_period needs an even m0");
  }
  const int m1 = m0 / 2;
  const std::vector<double> half = random_angles(m1, std::numbers::pi, seed, 1);
  std::vector<double> phi(half);
  for (int i = 1; i <= m1; ++i) {
    phi.push_back(half[static_cast<std::size_t>(i)] + std::numbers::pi);
  }
  TorusSpec spec{alpha, std::move(phi), random_angles(n0, kTwoPi, seed, 2), m0, n0};
  spec.validate();
  return spec;
}

SpaceFormNet clifford_torus(const TorusSpec& spec) {
  spec.validate();
  const int mf = static_cast<int>(spec.phi.size()) - 1;
  const int nf = static_cast<int>(spec.psi.size()) - 1;
  const double ca = std::cos(spec.alpha);
  const double sa = std::sin(spec.alpha);
  Grid<MVec> s(mf + 1, nf + 1);
  Grid<MVec> n(mf + 1, nf + 1);
  for (int m = 0; m <= mf; ++m) {
    const double cp = std::cos(spec.phi[static_cast<std::size_t>(m)]);
    const double sp = std::sin(spec.phi[static_cast<std::size_t>(m)]);
    for (int k = 0; k <= nf; ++k) {
      const double cs = std::cos(spec.psi[static_cast<std::size_t>(k)]);
      const double ss = std::sin(spec.psi[static_cast<std::size_t>(k)]);
      s(m, k) = MVec(ca * cp, ca * sp, sa * cs, sa * ss, -1.0);
      n(m, k) = MVec(-sa * cp, -sa * sp, ca * cs, ca * ss, 0.0);
    }
  }
  return {QuadNet(std::move(s)), QuadNet(std::move(n)), SpaceForm::spherical()};
}

QuadNet clifford_dual(const TorusSpec& spec, int sign) {
  spec.validate();
  if (sign != 1 && sign != -1) {
    throw GeometryError(ErrorKind::InvalidSpec, "sign must be +1 or -1");
  }
  const int mf = static_cast<int>(spec.phi.size()) - 1;
  const int nf = static_cast<int>(spec.psi.size()) - 1;
  const double ca = std::cos(spec.alpha) * sign;
  const double sa = std::sin(spec.alpha) * sign;
  Grid<MVec> out(mf + 1, nf + 1);
  for (int m = 0; m <= mf; ++m) {
    const double cp = std::cos(spec.phi[static_cast<std::size_t>(m)]);
    const double sp = std::sin(spec.phi[static_cast<std::size_t>(m)]);
    for (int k = 0; k <= nf; ++k) {
      const double cs = std::cos(spec.psi[static_cast<std::size_t>(k)]);
      const double ss = std::sin(spec.psi[static_cast<std::size_t>(k)]);
      out(m, k) = MVec(-ca * cp, -ca * sp, sa * cs, sa * ss, -1.0);
    }
  }
  return QuadNet(std::move(out));
}

SpaceFormNet euclidean_cylinder(double radius, const std::vector<double>& angles,
                                const std::vector<double>& heights) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(ErrorKind::InvalidSpec, "radius must be positive");
  }
  require_increasing(angles, "angles");
  require_increasing(heights, "heights");
  SpaceForm sf = SpaceForm::euclidean();
  const int mf = static_cast<int>(angles.size()) - 1;
  const int nf = static_cast<int>(heights.size()) - 1;
  Grid<MVec> s(mf + 1, nf + 1);
  Grid<MVec> n(mf + 1, nf + 1);
  const auto& e = sf.chart_basis();
  for (int m = 0; m <= mf; ++m) {
    const double c = std::cos(angles[static_cast<std::size_t>(m)]);
    const double si = std::sin(angles[static_cast<std::size_t>(m)]);
    for (int k = 0; k <= nf; ++k) {
      const Vec3 x{radius * c, radius * si, heights[static_cast<std::size_t>(k)]};
      s(m, k) = lift_euclidean(x, sf);
      const MVec g = c * e[0] + si * e[1];
      const double gx = c * x[0] + si * x[1];
      n(m, k) = g - gx * sf.q();
    }
  }
  return {QuadNet(std::move(s)), QuadNet(std::move(n)), std::move(sf)};
}

QuadNet translational_net(const std::vector<Vec3>& f, const std::vector<Vec3>& g) {
  if (f.size() < 2 || g.size() < 2) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "translational_net needs at least two points per curve");
  }
  Grid<MVec> out(static_cast<int>(f.size()), static_cast<int>(g.size()));
  for (std::size_t m = 0; m < f.size(); ++m) {
    for (std::size_t n = 0; n < g.size(); ++n) {
      out(static_cast<int>(m), static_cast<int>(n)) =
          MVec(f[m][0] + g[n][0], f[m][1] + g[n][1], f[m][2] + g[n][2], 0.0, 1.0);
    }
  }
  return QuadNet(std::move(out));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t x = splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

namespace {

MVec project_to_cone(const MVec& y, double r, const SpaceForm& sf) {
  const MVec& q = sf.q();
  if (!sf.is_flat()) {
    const double qq = inner(q, q);
    const MVec w = y - (inner(y, q) / qq) * q;
    const double ratio = (-r * r / qq) / inner(w, w);
    if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "perturbed vertex cannot be projected to the light cone");
    }
    return (r / qq) * q + std::sqrt(ratio) * w;
  }
  if (!sf.origin()) {
    throw GeometryError(ErrorKind::MissingOrigin,
                        "light-cone projection in a flat space form needs o");
  }
  if (r == 0.0) {
    throw GeometryError(ErrorKind::IsotropicFiber,
                        "cannot project a vertex with (y,q) = 0");
  }
  const MVec y2 = y + (r - inner(y, q)) * *sf.origin();
  return y2 - (inner(y2, y2) / (2.0 * r)) * q;
}

}  // namespace

QuadNet perturb(const QuadNet& net, double epsilon, std::uint64_t seed,
                PerturbConstraint constraint, const std::optional<SpaceForm>& sf) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw GeometryError(ErrorKind::InvalidInput, "epsilon must be non-negative");
  }
  if (constraint == PerturbConstraint::OnLightCone && !sf) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "OnLightCone perturbation needs a space form");
  }
  if (epsilon == 0.0) return net;
  const double scale = epsilon * net.mean_edge_length() / std::sqrt(5.0);
  Grid<MVec> out = net.vertices();
  std::vector<MVec>& v = out.flat();
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::array<double, kAmbientDim> u{};
    for (std::size_t c = 0; c < kAmbientDim; ++c) {
      u[c] = 2.0 * counter_uniform(seed, kAmbientDim * i + c) - 1.0;
    }
    MVec y = v[i] + scale * MVec(u);
    if (constraint == PerturbConstraint::OnLightCone) {
      y = project_to_cone(y, inner(v[i], sf->q()), *sf);
    }
    v[i] = y;
  }
  return QuadNet(std::move(out));
}

}  // namespace isonet

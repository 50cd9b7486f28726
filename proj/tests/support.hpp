#pragma once

// Test-side constructions that do not go through the library's algorithms.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "isonet/minkowski.hpp"
#include "isonet/quadnet.hpp"
#include "isonet/spaceform.hpp"

namespace isonet::fixtures {

using Mat5 = std::array<std::array<double, 5>, 5>;

inline MVec transform(const Mat5& L, const MVec& v) {
  std::array<double, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) out[i] += L[i][j] * v[j];
  }
  return MVec(out);
}

inline QuadNet transform(const Mat5& L, const QuadNet& net) {
  Grid<MVec> g = net.vertices();
  for (MVec& v : g.flat()) v = transform(L, v);
  return QuadNet(std::move(g));
}

inline Mat5 identity5() {
  Mat5 L{};
  for (std::size_t i = 0; i < 5; ++i) L[i][i] = 1.0;
  return L;
}

inline Mat5 multiply(const Mat5& a, const Mat5& b) {
  Mat5 c{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Boost mixing the spatial axis i with the time axis.
inline Mat5 boost(std::size_t i, double rapidity) {
  Mat5 L = identity5();
  L[i][i] = L[4][4] = std::cosh(rapidity);
  L[i][4] = L[4][i] = std::sinh(rapidity);
  return L;
}

inline Mat5 rotation(std::size_t i, std::size_t j, double angle) {
  Mat5 L = identity5();
  L[i][i] = L[j][j] = std::cos(angle);
  L[i][j] = -std::sin(angle);
  L[j][i] = std::sin(angle);
  return L;
}

inline Mat5 random_lorentz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  Mat5 L = identity5();
  for (std::size_t i = 0; i < 4; ++i) L = multiply(boost(i, u(rng)), L);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) L = multiply(rotation(i, j, 2.0 * u(rng)), L);
  return L;
}

/// A Koenigs net in the affine hyperplane {x5 = 1}, built from the discrete
/// Moutard equation mu_k - mu_i = a (mu_l - mu_j) for mu in R^6 with random
/// Cauchy data, then dehomogenized.
inline QuadNet moutard_net(int M, int N, std::uint64_t seed) {
  using V6 = std::array<double, 6>;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<V6> mu(static_cast<std::size_t>((M + 1) * (N + 1)));
    auto at = [&](int m, int n) -> V6& {
      return mu[static_cast<std::size_t>(m * (N + 1) + n)];
    };
    // Boundary points x in R^4 with weights w; nu = w alternates along n.
    auto boundary = [&](int m, int n, const std::array<double, 4>& x) {
      const double w = (n % 2 == 0 ? 1.0 : -1.0) * (1.0 + 0.3 * u(rng));
      at(m, n) = {w * x[0], w * x[1], w * x[2], w * x[3], 0.0, w};
    };
    std::array<double, 4> x{u(rng), u(rng), u(rng), u(rng)};
    boundary(0, 0, x);
    std::array<double, 4> y = x;
    for (int m = 1; m <= M; ++m) {
      for (int c = 0; c < 4; ++c) x[c] += (c == 0 ? 1.0 : 0.3) * (1.0 + 0.3 * u(rng));
      boundary(m, 0, x);
    }
    for (int n = 1; n <= N; ++n) {
      for (int c = 0; c < 4; ++c) y[c] += (c == 1 ? 1.0 : 0.3) * (1.0 + 0.3 * u(rng));
      boundary(0, n, y);
    }
    bool ok = true;
    for (int m = 0; m < M; ++m) {
      for (int n = 0; n < N; ++n) {
        const double a = 1.0 + 0.25 * u(rng);
        V6& k = at(m + 1, n + 1);
        for (int c = 0; c < 6; ++c) {
          k[c] = at(m, n)[c] + a * (at(m, n + 1)[c] - at(m + 1, n)[c]);
        }
        if (std::abs(k[5]) < 0.3) ok = false;
      }
    }
    if (!ok) continue;
    Grid<MVec> g(M + 1, N + 1);
    for (int m = 0; m <= M; ++m) {
      for (int n = 0; n <= N; ++n) {
        const V6& v = at(m, n);
        g(m, n) = MVec(v[0] / v[5], v[1] / v[5], v[2] / v[5], v[3] / v[5], 1.0);
      }
    }
    return QuadNet(std::move(g));
  }
}

/// A generic planar-faced net: s_k = s_i + b (s_j - s_i) + c (s_l - s_i)
/// with random b, c. Not Koenigs in general.
inline QuadNet conjugate_net(int M, int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Grid<MVec> g(M + 1, N + 1);
  g(0, 0) = MVec(0, 0, 0, 0, 1);
  for (int m = 1; m <= M; ++m)
    g(m, 0) = g(m - 1, 0) + MVec(1.0 + 0.3 * u(rng), 0.3 * u(rng), 0.3 * u(rng), 0.3 * u(rng), 0);
  for (int n = 1; n <= N; ++n)
    g(0, n) = g(0, n - 1) + MVec(0.3 * u(rng), 1.0 + 0.3 * u(rng), 0.3 * u(rng), 0.3 * u(rng), 0);
  for (int m = 0; m < M; ++m) {
    for (int n = 0; n < N; ++n) {
      const double b = 1.0 + 0.3 * u(rng);
      const double c = 1.0 + 0.3 * u(rng);
      g(m + 1, n + 1) = g(m, n) + b * (g(m + 1, n) - g(m, n)) + c * (g(m, n + 1) - g(m, n));
    }
  }
  return QuadNet(std::move(g));
}

inline double max_relative_diff(const QuadNet& a, const QuadNet& b) {
  double worst = 0.0;
  const double scale = std::max(1.0, a.mean_edge_length());
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    worst = std::max(worst, euclidean_norm(a.vertices().flat()[i] - b.vertices().flat()[i]) / scale);
  }
  return worst;
}

/// Least-squares fit b ~ c a + t; relative residual.
inline double homothety_fit_error(const QuadNet& a, const QuadNet& b) {
  const auto& va = a.vertices().flat();
  const auto& vb = b.vertices().flat();
  const double n = static_cast<double>(va.size());
  MVec ma, mb;
  for (std::size_t i = 0; i < va.size(); ++i) {
    ma += va[i] / n;
    mb += vb[i] / n;
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    num += euclidean_dot(va[i] - ma, vb[i] - mb);
    den += euclidean_dot(va[i] - ma, va[i] - ma);
  }
  const double c = num / den;
  double res = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const MVec r = (vb[i] - mb) - c * (va[i] - ma);
    res += euclidean_dot(r, r);
    ref += euclidean_dot(vb[i] - mb, vb[i] - mb);
  }
  return std::sqrt(res / ref);
}

// A 2x2-face net of vectors with (z,z) = 1 and (z,q) = H, built by hand.
inline QuadNet unit_congruence(double H, const SpaceForm& sf, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double kappa = sf.kappa();
  Grid<MVec> g(3, 3);
  for (MVec& z : g.flat()) {
    const double a = u(rng), b = u(rng);
    const MVec dir(std::cos(a) * std::cos(b), std::sin(a) * std::cos(b), std::sin(b), 0, 0);
    if (kappa == 0.0) {
      // z = H o + w with w a unit chart vector.
      z = H * *sf.origin() + dir;
    } else if (kappa > 0.0) {
      const double c = 1.0 + H * H / kappa;
      z = (H / inner(sf.q(), sf.q())) * sf.q() + std::sqrt(c) * dir;
    } else {
      const double c = 1.0 + H * H / kappa;
      MVec w;
      if (c > 0.0) {
        w = std::sqrt(c) * dir;
      } else if (c < 0.0) {
        w = std::sqrt(-c) * (std::cosh(a) * MVec::basis(4) + std::sinh(a) * dir);
      } else {
        w = (1.0 + std::abs(a)) * (dir + MVec::basis(4));
      }
      z = (H / inner(sf.q(), sf.q())) * sf.q() + w;
    }
  }
  return QuadNet(std::move(g));
}

}  // namespace isonet::fixtures

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "isonet/errors.hpp"
#include "isonet/generators.hpp"
#include "isonet/koenigs.hpp"
#include "isonet/spaceform.hpp"
#include "support.hpp"

using namespace isonet;

namespace {

constexpr double kPi = std::numbers::pi;
const double kAlphas[] = {kPi / 6, kPi / 4, kPi / 3};

struct Verdict {
  bool passed = true;
  std::string detail;

  // Records "name = value (< tol)" and fails if value >= tol or is NaN.
  void below(const std::string& name, double value, double tol) {
    const bool ok = value < tol;
    passed = passed && ok;
    append(name + " = " + num(value) + (ok ? " < " : " NOT < ") + num(tol));
  }
  void above(const std::string& name, double value, double tol) {
    const bool ok = value > tol;
    passed = passed && ok;
    append(name + " = " + num(value) + (ok ? " > " : " NOT > ") + num(tol));
  }
  void require(const std::string& what, bool ok) {
    passed = passed && ok;
    append(what + (ok ? " ok" : " FAILED"));
  }
  void append(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }

  static std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }
};

std::vector<TorusSpec> torus_specs() {
  std::vector<TorusSpec> out;
  for (double alpha : kAlphas) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      out.push_back(TorusSpec::random_steps(alpha, 12, 12, 1000 + seed));
    }
  }
  return out;
}

std::vector<Vec3> random_curve(std::mt19937_64& rng, int count, int axis) {
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  std::vector<Vec3> out{{u(rng), u(rng), u(rng)}};
  for (int i = 1; i < count; ++i) {
    Vec3 p = out.back();
    for (int c = 0; c < 3; ++c) p[c] += (c == axis ? 1.0 : 0.0) + u(rng);
    out.push_back(p);
  }
  return out;
}

struct Translational {
  QuadNet net;
  QuadNet dual;  // f(m) - g(n), built directly
};

std::vector<Translational> translational_nets(int count) {
  std::mt19937_64 rng(2024);
  std::vector<Translational> out;
  for (int k = 0; k < count; ++k) {
    const int M = 2 + k % 4;
    const int N = 2 + (k / 4) % 4;
    const auto f = random_curve(rng, M + 1, 0);
    const auto g = random_curve(rng, N + 1, 1);
    std::vector<Vec3> minus_g;
    for (const Vec3& p : g) minus_g.push_back({-p[0], -p[1], -p[2]});
    out.push_back({translational_net(f, g), translational_net(f, minus_g)});
  }
  return out;
}

struct Cylinder {
  double radius;
  SpaceFormNet net;
};

std::vector<Cylinder> cylinders() {
  std::vector<Cylinder> out;
  std::vector<double> uniform_angles, uniform_heights;
  for (int i = 0; i <= 8; ++i) uniform_angles.push_back(2 * kPi * i / 8);
  for (int i = 0; i <= 4; ++i) uniform_heights.push_back(0.5 * i);
  out.push_back({1.0, euclidean_cylinder(1.0, uniform_angles, uniform_heights)});
  out.push_back({0.6, euclidean_cylinder(0.6, {0.0, 0.3, 1.1, 1.5, 2.8, 4.0, 5.9},
                                         {-1.0, -0.2, 0.1, 1.7})});
  std::vector<double> fine;
  for (int i = 0; i <= 24; ++i) fine.push_back(0.1 * i + 0.02 * std::sin(3.0 * i));
  out.push_back({2.5, euclidean_cylinder(2.5, fine, {0.0, 0.05, 3.0})});
  return out;
}

double max_abs(const Grid<double>& g, const std::function<double(double)>& f) {
  double worst = 0.0;
  for (double x : g.flat()) worst = std::max(worst, std::abs(f(x)));
  return worst;
}

struct Pipeline {
  CurvatureReport curvature;
  SphereCongruence sphere;
};

Pipeline pipeline(const SpaceFormNet& n) {
  CurvatureReport c = face_curvatures(n.s, n.normals, n.sf);
  SphereCongruence z = mean_curvature_sphere(n.s, n.normals, c, n.sf, kCheckTol);
  return {std::move(c), std::move(z)};
}

// ---------------------------------------------------------------------------

Verdict criterion1() {
  Verdict v;
  double h_err = 0.0, k_err = 0.0;
  for (const TorusSpec& spec : torus_specs()) {
    const SpaceFormNet t = clifford_torus(spec);
    const CurvatureReport c = face_curvatures(t.s, t.normals, t.sf);
    const double cot2a = 1.0 / std::tan(2 * spec.alpha);
    h_err = std::max(h_err, max_abs(c.H, [&](double h) { return h + cot2a; }));
    const EdgeCurvatures k = edge_principal_curvatures(t.s, t.normals);
    for (const Edge& e : t.s.edges()) {
      const double expected =
          e.dir == Direction::U ? std::tan(spec.alpha) : -1.0 / std::tan(spec.alpha);
      k_err = std::max(k_err, std::abs(k.k[e] - expected));
    }
  }
  v.below("max|H + cot 2a| over 15 tori", h_err, 1e-9);
  v.below("max edge curvature error", k_err, 1e-12);
  return v;
}

Verdict criterion2() {
  Verdict v;
  constexpr double tol = 1e-10;
  double area = 0.0, edge = 0.0, diag = 0.0;
  bool agree = true;
  auto add = [&](const QuadNet& a, const QuadNet& b) {
    const DualPairReport r = check_dual_pair(a, b, tol);
    area = std::max(area, r.mixed_area.max_residual);
    edge = std::max(edge, r.edge_parallel.max_residual);
    diag = std::max(diag, r.diagonal_parallel.max_residual);
    agree = agree && r.criteria_agree;
  };
  for (double alpha : kAlphas) {
    const TorusSpec spec = TorusSpec::random_steps(alpha, 12, 12, 7);
    add(clifford_torus(spec).s, clifford_dual(spec));
  }
  for (const Translational& t : translational_nets(50)) add(t.net, t.dual);
  v.below("mixed-area residual", area, tol);
  v.below("edge parallelism", edge, tol);
  v.below("swapped-diagonal parallelism", diag, tol);
  v.require("mixed-area and diagonal verdicts agree", agree);
  return v;
}

Verdict criterion3() {
  Verdict v;
  double spread = 0.0, distance = 0.0;
  auto add = [&](const QuadNet& s, const QuadNet& dual, const SpaceForm& sf) {
    double lo = INFINITY, hi = -INFINITY;
    const QuadricMembership m = quadric_membership(dual, sf, kCheckTol);
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
      const MVec& a = s.vertices().flat()[i];
      const MVec& b = dual.vertices().flat()[i];
      const double sigma = inner(a, b);
      lo = std::min(lo, sigma);
      hi = std::max(hi, sigma);
      if (std::abs(m.params.r - 1.0) < 1e-12) {
        distance = std::max(distance, std::abs(inner(b - a, b - a) - (m.params.t - 2 * sigma)));
      }
    }
    spread = std::max(spread, hi - lo);
  };
  for (const TorusSpec& spec : torus_specs()) {
    const SpaceFormNet t = clifford_torus(spec);
    for (int sign : {1, -1}) add(t.s, clifford_dual(spec, sign), t.sf);
    const Pipeline p = pipeline(t);
    add(t.s, p.sphere.z, t.sf);
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      add(t.s, place_in_space_form(p.sphere.z, t.sf, p.sphere.H, b).placement.dual, t.sf);
    }
  }
  for (const Cylinder& c : cylinders()) {
    const Pipeline p = pipeline(c.net);
    add(c.net.s, p.sphere.z, c.net.sf);
    add(c.net.s, place_in_space_form(p.sphere.z, c.net.sf, p.sphere.H).placement.dual, c.net.sf);
  }
  v.below("(s,s*) spread", spread, 1e-10);
  v.below("| |s*-s|^2 - (t - 2(s,s*)) |", distance, 1e-10);
  return v;
}

Verdict criterion4() {
  Verdict v;
  double norm = 0.0, q = 0.0, area = 0.0, member = 0.0;
  auto add = [&](const SpaceFormNet& n) {
    const Pipeline p = pipeline(n);
    norm = std::max(norm, p.sphere.norm_residual);
    q = std::max(q, p.sphere.q_residual);
    area = std::max(area, p.sphere.mixed_area_residual);
    const QuadricMembership m = quadric_membership(p.sphere.z, n.sf, 1e-10);
    member = std::max({member, std::abs(m.params.r - p.sphere.H), std::abs(m.params.t - 1.0)});
  };
  for (const TorusSpec& spec : torus_specs()) add(clifford_torus(spec));
  for (const Cylinder& c : cylinders()) add(c.net);
  v.below("|(z,z) - 1|", norm, 1e-10);
  v.below("|(z,q) - H|", q, 1e-10);
  v.below("|A(z,s)|/|A(s,s)|", area, 1e-10);
  v.below("membership (H,1) error", member, 1e-10);
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double formula = 0.0, landing = 0.0, chordal = 0.0;

  std::vector<std::pair<SpaceFormNet, Pipeline>> cases;
  for (double alpha : kAlphas) {
    SpaceFormNet t = clifford_torus(TorusSpec::random_steps(alpha, 12, 12, 3));
    Pipeline p = pipeline(t);
    cases.emplace_back(std::move(t), std::move(p));
  }
  for (Cylinder& c : cylinders()) {
    Pipeline p = pipeline(c.net);
    cases.emplace_back(std::move(c.net), std::move(p));
  }
  for (const auto& [net, p] : cases) {
    const double H = p.sphere.H;
    const double kappa = net.sf.kappa();
    for (int trial = 0; trial < 25; ++trial) {
      double lambda = u(rng);
      if (std::abs(lambda) < 0.05) lambda = 1.0;
      const double mu = u(rng);
      const DualPlacement d = dual_family(p.sphere.z, net.sf, lambda, mu, H, 1e-6, true);
      formula = std::max({formula, std::abs(d.measured.r - (lambda * H - mu * kappa)),
                          std::abs(d.measured.t - (lambda * lambda + 2 * lambda * mu * H -
                                                   mu * mu * kappa))});
    }
    // The stated branch lambda = s/sqrt(H^2+kappa), mu = -1/(s sqrt(.)(H + s sqrt(.))).
    const double root = std::sqrt(H * H + kappa);
    for (int sign : {1, -1}) {
      const double denom = sign * root * (H + sign * root);
      if (std::abs(denom) < 1e-12) continue;
      const DualPlacement d =
          dual_family(p.sphere.z, net.sf, sign / root, -1.0 / denom, H, 1e-6, true);
      landing = std::max({landing, std::abs(d.measured.r - 1.0), std::abs(d.measured.t)});
      if (kappa > 0) {
        const double expected = (2.0 / kappa) * (1.0 - sign * H / root);
        for (std::size_t i = 0; i < net.s.vertices().size(); ++i) {
          const MVec diff = d.dual.vertices().flat()[i] - net.s.vertices().flat()[i];
          chordal = std::max(chordal, std::abs(inner(diff, diff) - expected));
        }
      }
    }
  }
  v.below("measured vs predicted (r,t)", formula, 1e-10);
  v.below("stated branch distance to Q_{1,0}", landing, 1e-10);
  v.below("spherical chordal distance error", chordal, 1e-9);
  return v;
}

Verdict criterion6() {
  Verdict v;
  // The case table, written out entry by entry.
  struct Row {
    double H, kappa;
    Regime expected;
  };
  std::vector<Row> table;
  const double values[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (double H : values) {
    for (double kappa : values) {
      Regime r;
      if (kappa > 0) {
        r = Regime::SphericalPair;
      } else if (kappa == 0) {
        r = H == 0 ? Regime::EuclideanMinimal_IsotropicCylinder : Regime::EuclideanCMC;
      } else if (std::abs(H) > std::sqrt(-kappa)) {
        r = Regime::HyperbolicTwoSheeted;
      } else if (std::abs(H) == std::sqrt(-kappa)) {
        r = Regime::Horospherical_LightCone;
      } else {
        r = Regime::Hyperbolic_OneSheeted;
      }
      table.push_back({H, kappa, r});
    }
  }
  int mismatches = 0, sign_mismatches = 0;
  for (const Row& row : table) {
    const RegimeInfo info = classify_regime(row.H, row.kappa);
    if (info.regime != row.expected) ++mismatches;
    const SpaceForm sf = SpaceForm::with_curvature(row.kappa);
    const QuadNet z = fixtures::unit_congruence(row.H, sf, 17);
    for (double lambda : {0.7, -1.3}) {
      const DualPlacement d = dual_family(z, sf, lambda, 0.4, row.H, 1e-10, true);
      const double gap = d.measured.r * d.measured.r + d.measured.t * row.kappa;
      const int sign = std::abs(gap) < 1e-12 ? 0 : (gap > 0 ? 1 : -1);
      const double l = row.H * row.H + row.kappa;
      const int expected_sign = l == 0 ? 0 : (l > 0 ? 1 : -1);
      if (sign != expected_sign) ++sign_mismatches;
    }
  }
  v.require("25 table entries (" + std::to_string(mismatches) + " mismatches)", mismatches == 0);
  v.require("sign(r^2 + t kappa) of 50 duals (" + std::to_string(sign_mismatches) +
                " mismatches)",
            sign_mismatches == 0);
  v.require("(0,1) SphericalPair", classify_regime(0, 1).regime == Regime::SphericalPair);
  v.require("(0,-1) label",
            classify_regime(0, -1).label() == "Hyperbolic_OneSheeted (iii)(c)");
  return v;
}

Verdict criterion7() {
  Verdict v;
  const std::vector<double> offsets{0.1, 0.5, 1.0, 2.0};
  double worst = 0.0;
  int nets = 0;
  auto add = [&](const SpaceFormNet& n) {
    const CurvatureReport c = face_curvatures(n.s, n.normals, n.sf);
    const SteinerReport r = steiner_check(n.s, n.normals, c, offsets, 1e-12);
    for (double x : r.max_residual) worst = std::max(worst, x);
    ++nets;
  };
  for (const TorusSpec& spec : torus_specs()) add(clifford_torus(spec));
  add(clifford_torus(TorusSpec::half_period(kPi / 4, 12, 12, 5)));
  add(clifford_torus(TorusSpec::uniform(kPi / 4, 8, 8)));
  for (const Cylinder& c : cylinders()) add(c.net);
  v.below("Steiner residual over " + std::to_string(nets) + " nets", worst, 1e-12);
  return v;
}

Verdict criterion8() {
  Verdict v;
  double h_err = 0.0, dist_err = 0.0;
  for (const Cylinder& c : cylinders()) {
    const Pipeline p = pipeline(c.net);
    h_err = std::max(h_err, max_abs(p.curvature.H, [&](double h) {
      return std::abs(h) - 1.0 / (2 * c.radius);
    }));
    const SpaceFormDual d = place_in_space_form(p.sphere.z, c.net.sf, p.sphere.H);
    const QuadNet& dual = d.placement.dual;
    for (int m = 0; m <= dual.m_faces(); ++m) {
      for (int n = 0; n <= dual.n_faces(); ++n) {
        const Vec3 a = chart_project(c.net.s(m, n), c.net.sf);
        const Vec3 b = chart_project(dual(m, n), c.net.sf);
        const double dist = std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
        dist_err = std::max(dist_err, std::abs(dist - 2 * c.radius));
      }
    }
  }
  v.below("max ||H| - 1/(2R)| over 3 discretizations", h_err, 1e-10);
  v.below("dual distance error vs 2R", dist_err, 1e-9);
  return v;
}

Verdict criterion9() {
  Verdict v;
  double worst = 0.0;
  int nets = 0;
  auto add = [&](const QuadNet& net) {
    worst = std::max(worst, dualize_twice(net, 1e-8).relative_error);
    ++nets;
  };
  for (const Translational& t : translational_nets(50)) add(t.net);
  for (const TorusSpec& spec : torus_specs()) add(clifford_torus(spec).s);
  add(clifford_torus(TorusSpec::half_period(kPi / 4, 12, 12, 5)).s);
  for (const Cylinder& c : cylinders()) add(c.net.s);
  for (std::uint64_t seed = 0; seed < 10; ++seed) add(fixtures::moutard_net(5, 5, 900 + seed));
  v.below("round-trip error over " + std::to_string(nets) + " nets", worst, 1e-8);
  return v;
}

Verdict criterion10() {
  Verdict v;
  double koenigs = INFINITY, factor = INFINITY, pair = INFINITY;
  bool all_fail = true;
  for (double alpha : kAlphas) {
    const TorusSpec spec = TorusSpec::random_steps(alpha, 12, 12, 11);
    const SpaceFormNet t = clifford_torus(spec);
    const QuadNet dual = clifford_dual(spec);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const QuadNet p = perturb(t.s, 1e-2, seed, PerturbConstraint::OnLightCone, t.sf);
      const CheckReport k = koenigs_test(p);
      const FactorizationResult f = check_factorization(p);
      const DualPairReport d = check_dual_pair(p, dual);
      koenigs = std::min(koenigs, k.max_residual);
      factor = std::min(factor, f.report.max_residual);
      pair = std::min(pair, d.mixed_area.max_residual);
      all_fail = all_fail && !k.passed && !f.report.passed && !d.passed;
    }
    const QuadNet same = perturb(t.s, 0.0, 1, PerturbConstraint::OnLightCone, t.sf);
    v.require("eps = 0 passes (alpha " + Verdict::num(alpha) + ")",
              koenigs_test(same).passed && check_factorization(same).report.passed &&
                  check_dual_pair(same, dual).passed);
  }
  v.require("all perturbed checks fail", all_fail);
  v.above("min koenigs residual", koenigs, 1e-4);
  v.above("min factorization residual", factor, 1e-4);
  v.above("min dual-pair mixed-area residual", pair, 1e-4);
  return v;
}

Verdict criterion11() {
  Verdict v;
  const TorusSpec spec = TorusSpec::half_period(kPi / 4, 12, 12, 21);
  const SpaceFormNet t = clifford_torus(spec);
  const QuadNet dual = clifford_dual(spec);
  const SelfDualityReport r = detect_self_duality(t.s, dual, t.sf, 1e-10);
  v.require("index shift found", r.shift.has_value());
  if (!r.shift) return v;
  v.require("shift (m1, 0) with m1 = m0/2", r.shift->dm == 6 && r.shift->dn == 0);
  v.below("(T,T) for shifted pair", r.shift_tangent_norm_sq, 1e-10);
  // The shifted torus and its dual raise SelfDual in gauss_from_dual.
  Grid<MVec> shifted(13, 13);
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n) shifted(m, n) = t.s((m + r.shift->dm) % 12, n);
  bool raised = false;
  try {
    gauss_from_dual(QuadNet(std::move(shifted)), dual, t.sf, 1e-10);
  } catch (const GeometryError& e) {
    raised = e.kind() == ErrorKind::SelfDual;
  }
  v.require("gauss_from_dual raises SelfDual", raised);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Clifford torus exactness", criterion1},
      {"Duality <=> zero mixed area", criterion2},
      {"Constant pairing", criterion3},
      {"Sphere-congruence contract", criterion4},
      {"Dual family placement", criterion5},
      {"Regime classification", criterion6},
      {"Steiner polynomial", criterion7},
      {"Euclidean cylinder", criterion8},
      {"Roundtrip", criterion9},
      {"Negative controls", criterion10},
      {"Self-duality detection", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.passed = false;
      v.append(std::string("exception: ") + e.what());
    }
    if (!v.passed) ++failures;
    std::printf("%s %2zu. %s: %s\n", v.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "isonet/spaceform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isonet/errors.hpp"
#include "isonet/koenigs.hpp"

namespace isonet {

namespace {

constexpr double kFlatEps = 1e-14;
constexpr double kOriginTol = 1e-12;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::size_t count = 0;

  void add(double x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    sum += x;
    ++count;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double spread() const { return count ? hi - lo : 0.0; }
  double relative_spread() const {
    return spread() / std::max(1.0, std::abs(mean()));
  }
};

double mean_sq_norm(const QuadNet& net) {
  double s = 0.0;
  for (const MVec& v : net.vertices().flat()) s += euclidean_dot(v, v);
  return s / static_cast<double>(net.vertices().size());
}

}  // namespace

SpaceForm::SpaceForm(const MVec& q, std::optional<MVec> origin)
    : q_(q), origin_(std::move(origin)) {
  if (euclidean_norm(q_) == 0.0) {
    throw GeometryError(ErrorKind::InvalidInput, "q must be nonzero");
  }
  if (!origin_) return;
  const MVec& o = *origin_;
  const double scale = std::max(1.0, euclidean_norm(o) * euclidean_norm(q_));
  if (std::abs(inner(o, o)) > kOriginTol * std::max(1.0, euclidean_dot(o, o)) ||
      std::abs(inner(o, q_) - 1.0) > kOriginTol * scale) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "origin must satisfy (o,o) = 0 and (o,q) = 1");
  }
  // Gram-Schmidt on the coordinate basis, projected onto {o,q}^perp.
  const double g00 = inner(o, o);
  const double g01 = inner(o, q_);
  const double g11 = inner(q_, q_);
  const double det = g00 * g11 - g01 * g01;
  std::size_t found = 0;
  for (std::size_t i = 0; i < kAmbientDim && found < 3; ++i) {
    const MVec e = MVec::basis(i);
    const double bo = inner(e, o);
    const double bq = inner(e, q_);
    const double co = (g11 * bo - g01 * bq) / det;
    const double cq = (g00 * bq - g01 * bo) / det;
    MVec y = e - co * o - cq * q_;
    for (std::size_t j = 0; j < found; ++j) y -= inner(y, chart_[j]) * chart_[j];
    const double nn = inner(y, y);
    if (nn > 1e-10) chart_[found++] = y / std::sqrt(nn);
  }
  if (found != 3) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "{o,q}^perp is not a Euclidean 3-space");
  }
}

SpaceForm SpaceForm::euclidean() {
  return SpaceForm(MVec(0, 0, 0, 1, -1), MVec(0, 0, 0, 0.5, 0.5));
}

SpaceForm SpaceForm::spherical() { return SpaceForm(MVec::basis(4)); }

SpaceForm SpaceForm::hyperbolic() { return SpaceForm(MVec::basis(3)); }

SpaceForm SpaceForm::with_curvature(double kappa) {
  if (kappa > 0.0) return SpaceForm(std::sqrt(kappa) * MVec::basis(4));
  if (kappa < 0.0) return SpaceForm(std::sqrt(-kappa) * MVec::basis(3));
  return euclidean();
}

bool SpaceForm::is_flat() const {
  return std::abs(inner(q_, q_)) <= kFlatEps * euclidean_dot(q_, q_);
}

MVec SpaceForm::center(double r) const {
  if (is_flat()) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "a flat space form has no center");
  }
  return (r / inner(q_, q_)) * q_;
}

const std::array<MVec, 3>& SpaceForm::chart_basis() const {
  if (!origin_) {
    throw GeometryError(ErrorKind::MissingOrigin,
                        "the Euclidean chart needs an origin o");
  }
  return chart_;
}

ConcentricParams make_concentric(double r, double t, const SpaceForm& sf,
                                 bool allow_singular) {
  if (!std::isfinite(r) || !std::isfinite(t)) {
    throw GeometryError(ErrorKind::InvalidInput, "r and t must be finite");
  }
  if (!sf.is_flat()) {
    const double qq = inner(sf.q(), sf.q());
    const double gap = r * r - t * qq;  // = r^2 + t kappa
    const double scale = std::max({1.0, r * r, std::abs(t * qq)});
    const bool singular = std::abs(gap) <= 1e-12 * scale;
    if (singular && !allow_singular) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "singular concentric quadric r^2 + t kappa = 0");
    }
    if (qq < 0.0 && !singular && gap < 0.0) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "definite case requires t (q,q) < r^2");
    }
  }
  return {r, t};
}

MVec lift_euclidean(const Vec3& x, const SpaceForm& sf) {
  const auto& basis = sf.chart_basis();
  if (!sf.is_flat()) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "the Euclidean lift needs kappa = 0");
  }
  const MVec X = x[0] * basis[0] + x[1] * basis[1] + x[2] * basis[2];
  return *sf.origin() + X - 0.5 * inner(X, X) * sf.q();
}

Vec3 chart_project(const MVec& s, const SpaceForm& sf) {
  const auto& basis = sf.chart_basis();
  if (!sf.is_flat()) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "the Euclidean chart needs kappa = 0");
  }
  const double r = inner(s, sf.q());
  if (std::abs(r) <= 1e-12 * std::max(1.0, euclidean_norm(s))) {
    throw GeometryError(ErrorKind::IsotropicFiber,
                        "(s,q) = 0: point of an isotropic cylinder has no chart");
  }
  return {inner(s, basis[0]), inner(s, basis[1]), inner(s, basis[2])};
}

QuadricMembership quadric_membership(const QuadNet& net, const SpaceForm& sf,
                                     double tol) {
  Range r;
  Range t;
  for (const MVec& v : net.vertices().flat()) {
    r.add(inner(v, sf.q()));
    t.add(inner(v, v));
  }
  QuadricMembership out;
  out.params = {r.mean(), t.mean()};
  out.r_spread = r.relative_spread();
  out.t_spread = t.relative_spread();
  out.tolerance = tol;
  if (!(out.r_spread <= tol) || !(out.t_spread <= tol)) {
    throw GeometryError(ErrorKind::NotInConcentricFamily,
                        "(s,q) or (s,s) is not constant over the net", {},
                        std::max(out.r_spread, out.t_spread));
  }
  return out;
}

EdgeCurvatures edge_principal_curvatures(const QuadNet& s, const QuadNet& n,
                                         double tol) {
  require_same_dims(s, n);
  EdgeCurvatures out;
  out.k = EdgeForm<double>(s.m_faces(), s.n_faces(), EdgeKind::EdgeFunction);
  out.residual = EdgeForm<double>(s.m_faces(), s.n_faces(), EdgeKind::EdgeFunction);
  out.tolerance = tol;
  for (const Edge& e : s.edges()) {
    const MVec ds = d(s, e);
    const MVec dn = d(n, e);
    const double dsds = inner(ds, ds);
    const double scale = euclidean_dot(ds, ds);
    if (scale == 0.0 || std::abs(dsds) <= 1e-14 * scale) {
      throw GeometryError(ErrorKind::NullEdge, "isotropic or zero edge",
                          to_string(e));
    }
    const double k = -inner(dn, ds) / dsds;
    const double res = euclidean_norm(dn + k * ds) / std::sqrt(scale);
    out.k[e] = k;
    out.residual[e] = res;
    out.max_residual = std::max(out.max_residual, res);
  }
  out.passed = out.max_residual <= tol;
  return out;
}

GaussMap make_gauss_map(const QuadNet& s, QuadNet normals, const SpaceForm& sf,
                        double tol) {
  require_same_dims(s, normals);
  for (int m = 0; m <= s.m_faces(); ++m) {
    for (int n = 0; n <= s.n_faces(); ++n) {
      const MVec& nv = normals(m, n);
      const MVec& sv = s(m, n);
      const double scale = std::max(1.0, euclidean_norm(sv));
      if (std::abs(inner(nv, nv) - 1.0) > tol ||
          std::abs(inner(nv, sv)) > tol * scale ||
          std::abs(inner(nv, sf.q())) > tol * euclidean_norm(sf.q())) {
        throw GeometryError(ErrorKind::InvalidInput,
                            "Gauss map must be a unit vector in {s,q}^perp",
                            to_string(VertexIndex{m, n}));
      }
    }
  }
  GaussMap out{std::move(normals), {}};
  out.curvatures = edge_principal_curvatures(s, out.normals, tol);
  return out;
}

CurvatureReport face_curvatures(const QuadNet& s, const QuadNet& n,
                                const SpaceForm& sf) {
  require_same_dims(s, n);
  const int mf = s.m_faces();
  const int nf = s.n_faces();
  CurvatureReport out;
  out.kappa = sf.kappa();
  out.H = Grid<double>(mf, nf);
  out.K = Grid<double>(mf, nf);
  out.h_residual = Grid<double>(mf, nf);
  out.k_residual = Grid<double>(mf, nf);
  out.lawson = Grid<double>(mf, nf);
  Range h;
  Range k;
  for (FaceIndex f : s.faces()) {
    const BiVec ass = mixed_area(s, s, f);
    const Diagonals dg = diagonals(s, f);
    if (ass.norm() <= 1e-12 * euclidean_norm(dg.ik) * euclidean_norm(dg.jl)) {
      throw GeometryError(ErrorKind::DegenerateFace, "A(s,s) vanishes",
                          to_string(f));
    }
    const BivecRatio hr = bivec_ratio(mixed_area(n, s, f), ass);
    const BivecRatio kr = bivec_ratio(mixed_area(n, n, f), ass);
    out.H(f.m, f.n) = -hr.ratio;
    out.K(f.m, f.n) = kr.ratio;
    out.h_residual(f.m, f.n) = hr.residual;
    out.k_residual(f.m, f.n) = kr.residual;
    out.lawson(f.m, f.n) = hr.ratio * hr.ratio + out.kappa;
    out.max_h_residual = std::max(out.max_h_residual, hr.residual);
    out.max_k_residual = std::max(out.max_k_residual, kr.residual);
    h.add(-hr.ratio);
    k.add(kr.ratio);
  }
  out.h_min = h.lo;
  out.h_max = h.hi;
  out.h_mean = h.mean();
  out.k_min = k.lo;
  out.k_max = k.hi;
  out.k_mean = k.mean();
  return out;
}

namespace {

void require_in_space_form(const QuadNet& s, const SpaceForm& sf, double tol) {
  for (int m = 0; m <= s.m_faces(); ++m) {
    for (int n = 0; n <= s.n_faces(); ++n) {
      const MVec& v = s(m, n);
      const double scale = std::max(1.0, euclidean_dot(v, v));
      if (std::abs(inner(v, v)) > tol * scale ||
          std::abs(inner(v, sf.q()) - 1.0) > tol * std::sqrt(scale)) {
        throw GeometryError(ErrorKind::NotOnQuadric,
                            "net is not in the space form Q_{1,0}",
                            to_string(VertexIndex{m, n}));
      }
    }
  }
}

// t = s* + (sigma Q - r) s - sigma q for s in Q_{1,0}.
MVec tangent_vector(const MVec& s, const MVec& dual, const MVec& q) {
  const double sigma = inner(s, dual);
  const double r = inner(dual, q);
  return dual + (sigma * inner(q, q) - r) * s - sigma * q;
}

}  // namespace

TangentCongruence gauss_from_dual(const QuadNet& s, const QuadNet& dual,
                                  const SpaceForm& sf, double tol) {
  require_same_dims(s, dual);
  require_in_space_form(s, sf, tol);
  const QuadricMembership member = quadric_membership(dual, sf, tol);
  const MVec& q = sf.q();
  const double qq = inner(q, q);
  const int rows = s.m_faces() + 1;
  const int cols = s.n_faces() + 1;

  Range pairing;
  for (int m = 0; m < rows; ++m) {
    for (int n = 0; n < cols; ++n) pairing.add(inner(s(m, n), dual(m, n)));
  }
  if (!(pairing.relative_spread() <= tol)) {
    throw GeometryError(ErrorKind::NonConstantPairing, "(s,s*) is not constant",
                        {}, pairing.relative_spread());
  }

  Grid<MVec> tangent(rows, cols);
  Range norm;
  for (int m = 0; m < rows; ++m) {
    for (int n = 0; n < cols; ++n) {
      const MVec t = tangent_vector(s(m, n), dual(m, n), q);
      tangent(m, n) = t;
      norm.add(inner(t, t));
    }
  }
  const double scale = std::max(1.0, mean_sq_norm(dual));
  if (norm.lo < tol * scale) {
    throw GeometryError(ErrorKind::SelfDual,
                        "tangent congruence vanishes: s* is a homothety-translate of s",
                        {}, norm.lo);
  }

  Grid<MVec> normals(rows, cols);
  for (int m = 0; m < rows; ++m) {
    for (int n = 0; n < cols; ++n) {
      const MVec& t = tangent(m, n);
      normals(m, n) = t / std::sqrt(inner(t, t));
    }
  }
  const double H = -(pairing.mean() * qq - member.params.r) / std::sqrt(norm.mean());
  return TangentCongruence{make_gauss_map(s, QuadNet(std::move(normals)), sf, tol),
                           std::move(tangent),
                           H,
                           pairing.mean(),
                           pairing.relative_spread(),
                           norm.mean(),
                           norm.relative_spread(),
                           member.params};
}

SphereCongruence mean_curvature_sphere(const QuadNet& s, const QuadNet& n,
                                       double H, const SpaceForm& sf,
                                       double tol) {
  require_same_dims(s, n);
  Grid<MVec> z(s.m_faces() + 1, s.n_faces() + 1);
  SphereCongruence out{QuadNet(1, 1), H, 0.0, 0.0, 0.0};
  for (int m = 0; m <= s.m_faces(); ++m) {
    for (int k = 0; k <= s.n_faces(); ++k) {
      const MVec v = n(m, k) + H * s(m, k);
      z(m, k) = v;
      out.norm_residual = std::max(out.norm_residual, std::abs(inner(v, v) - 1.0));
      out.q_residual = std::max(out.q_residual, std::abs(inner(v, sf.q()) - H));
    }
  }
  out.z = QuadNet(std::move(z));
  for (FaceIndex f : s.faces()) {
    const double ass = mixed_area(s, s, f).norm();
    if (ass == 0.0) {
      throw GeometryError(ErrorKind::DegenerateFace, "A(s,s) vanishes",
                          to_string(f));
    }
    out.mixed_area_residual =
        std::max(out.mixed_area_residual, mixed_area(out.z, s, f).norm() / ass);
  }
  const double worst =
      std::max({out.norm_residual, out.q_residual, out.mixed_area_residual});
  if (!(worst <= tol)) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "z = n + H s violates (z,z) = 1, (z,q) = H or A(z,s) = 0",
                        {}, worst);
  }
  return out;
}

SphereCongruence mean_curvature_sphere(const QuadNet& s, const QuadNet& n,
                                       const CurvatureReport& curvature,
                                       const SpaceForm& sf, double tol) {
  const double H = curvature.h_mean;
  if (!(curvature.h_spread() <= tol * std::max(1.0, std::abs(H)))) {
    throw GeometryError(ErrorKind::NonConstantH,
                        "mean curvature is not constant across faces", {},
                        curvature.h_spread());
  }
  return mean_curvature_sphere(s, n, H, sf, tol);
}

DualPlacement dual_family(const QuadNet& z, const SpaceForm& sf, double lambda,
                          double mu, double H, double tol,
                          bool allow_singular) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || lambda == 0.0) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "lambda must be finite and nonzero, mu finite");
  }
  const double kappa = sf.kappa();
  DualPlacement out{QuadNet(1, 1), lambda, mu, {}, {}, {}};
  out.predicted = make_concentric(lambda * H - mu * kappa,
                                  lambda * lambda + 2.0 * lambda * mu * H -
                                      mu * mu * kappa,
                                  sf, allow_singular);
  Grid<MVec> y(z.m_faces() + 1, z.n_faces() + 1);
  for (int m = 0; m <= z.m_faces(); ++m) {
    for (int n = 0; n <= z.n_faces(); ++n) y(m, n) = lambda * z(m, n) + mu * sf.q();
  }
  out.dual = QuadNet(std::move(y));
  const QuadricMembership member = quadric_membership(out.dual, sf, tol);
  out.measured = member.params;
  const double dr = std::abs(out.measured.r - out.predicted.r);
  const double dt = std::abs(out.measured.t - out.predicted.t);
  if (dr > tol * std::max(1.0, std::abs(out.predicted.r)) ||
      dt > tol * std::max(1.0, std::abs(out.predicted.t))) {
    throw GeometryError(ErrorKind::NotInConcentricFamily,
                        "measured (r,t) disagrees with lambda z + mu q prediction",
                        {}, std::max(dr, dt));
  }
  const double gap = out.predicted.r * out.predicted.r + out.predicted.t * kappa;
  if (kappa < 0.0 && gap > tol * std::max(1.0, out.predicted.r * out.predicted.r)) {
    for (const MVec& v : out.dual.vertices().flat()) {
      out.sheets.push_back(hyperbolic_sheet(v, sf));
    }
  }
  return out;
}

SpaceFormDual place_in_space_form(const QuadNet& z, const SpaceForm& sf,
                                  double H, Branch branch, double tol) {
  const double kappa = sf.kappa();
  const double lawson = H * H + kappa;
  SpaceFormDual out{{QuadNet(1, 1), 0.0, 0.0, {}, {}, {}}, 1, 0.0};
  if (sf.is_flat()) {
    if (H == 0.0) {
      throw GeometryError(ErrorKind::NoDualInSpaceForm,
                          "H = 0 in a flat space form: the dual lies on an "
                          "isotropic cylinder");
    }
    out.placement = dual_family(z, sf, 1.0 / H, -0.5 / (H * H), H, tol);
    out.predicted_distance_sq = 1.0 / (H * H);
    return out;
  }
  if (!(lawson > 0.0)) {
    throw GeometryError(ErrorKind::NoDualInSpaceForm,
                        "H^2 + kappa <= 0: no dual in the space form", {},
                        lawson);
  }
  switch (branch) {
    case Branch::Plus: out.sign = 1; break;
    case Branch::Minus: out.sign = -1; break;
    case Branch::Closest: out.sign = H < 0.0 ? -1 : 1; break;
  }
  const double root = std::sqrt(lawson);
  const double sg = static_cast<double>(out.sign);
  const double lambda = sg / root;
  const double mu = sg * H / (kappa * root) - 1.0 / kappa;
  out.placement = dual_family(z, sf, lambda, mu, H, tol);
  out.predicted_distance_sq = (2.0 / kappa) * (1.0 - sg * H / root);
  return out;
}

int hyperbolic_sheet(const MVec& y, const SpaceForm& sf) {
  if (!(sf.kappa() < 0.0)) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "hyperbolic sheets need kappa < 0");
  }
  const MVec v = y - sf.center(inner(y, sf.q()));
  if (!(inner(v, v) < 0.0)) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "y - c_r is not timelike: no two-sheeted quadric");
  }
  return v[4] > 0.0 ? 1 : -1;
}

std::string RegimeInfo::label() const {
  return std::string(name) + " " + std::string(case_label);
}

RegimeInfo classify_regime(double H, double kappa, double eps) {
  const auto sign = [eps](double x) { return std::abs(x) <= eps ? 0 : (x > 0 ? 1 : -1); };
  const int k = sign(kappa);
  const int l = sign(H * H + kappa);
  if (l > 0) {
    if (k > 0) return {Regime::SphericalPair, "SphericalPair", "(i)(a)", "concentric spheres"};
    if (k == 0) return {Regime::EuclideanCMC, "EuclideanCMC", "(i)(b)", "translated paraboloids"};
    return {Regime::HyperbolicTwoSheeted, "HyperbolicTwoSheeted", "(i)(c)",
            "two-sheeted hyperboloids"};
  }
  if (l == 0) {
    if (k == 0) {
      return {Regime::EuclideanMinimal_IsotropicCylinder,
              "EuclideanMinimal_IsotropicCylinder", "(ii)(b)", "isotropic cylinder"};
    }
    return {Regime::Horospherical_LightCone, "Horospherical_LightCone", "(ii)(c)",
            "light cone"};
  }
  return {Regime::Hyperbolic_OneSheeted, "Hyperbolic_OneSheeted", "(iii)(c)",
          "one-sheeted hyperboloid"};
}

SteinerReport steiner_check(const QuadNet& s, const QuadNet& n,
                            const CurvatureReport& curvature,
                            std::span<const double> offsets, double tol) {
  require_same_dims(s, n);
  SteinerReport out;
  out.tolerance = tol;
  out.offsets.assign(offsets.begin(), offsets.end());
  out.passed = true;
  for (double t : offsets) {
    Grid<MVec> shifted(s.m_faces() + 1, s.n_faces() + 1);
    for (int m = 0; m <= s.m_faces(); ++m) {
      for (int k = 0; k <= s.n_faces(); ++k) shifted(m, k) = s(m, k) + t * n(m, k);
    }
    const QuadNet p(std::move(shifted));
    Range poly;
    double worst = 0.0;
    for (FaceIndex f : s.faces()) {
      const double H = curvature.H(f.m, f.n);
      const double K = curvature.K(f.m, f.n);
      const double c = 1.0 - 2.0 * H * t + K * t * t;
      const BiVec ass = mixed_area(s, s, f);
      const double res = (mixed_area(p, p, f) - c * ass).norm() / ass.norm();
      worst = std::max(worst, res);
      poly.add(c);
    }
    out.max_residual.push_back(worst);
    out.min_polynomial.push_back(poly.lo);
    out.max_polynomial.push_back(poly.hi);
    if (!(worst <= tol)) out.passed = false;
  }
  return out;
}

namespace {

double max_tangent_norm_sq(const QuadNet& s, const QuadNet& dual, const MVec& q) {
  double worst = 0.0;
  for (int m = 0; m <= s.m_faces(); ++m) {
    for (int n = 0; n <= s.n_faces(); ++n) {
      const MVec t = tangent_vector(s(m, n), dual(m, n), q);
      worst = std::max(worst, std::abs(inner(t, t)));
    }
  }
  return worst;
}

int wrap(int i, int period) { return ((i % period) + period) % period; }

}  // namespace

SelfDualityReport detect_self_duality(const QuadNet& s, const QuadNet& dual,
                                      const SpaceForm& sf, double tol) {
  require_same_dims(s, dual);
  require_in_space_form(s, sf, std::max(tol, kCheckTol));
  const MVec& q = sf.q();
  const double scale = std::max(1.0, mean_sq_norm(dual));
  SelfDualityReport out;
  out.tolerance = tol;
  out.pointwise_tangent_norm_sq = max_tangent_norm_sq(s, dual, q);
  out.pointwise = out.pointwise_tangent_norm_sq <= tol * scale;

  const PeriodicityReport period = check_periodicity(s, kCheckTol);
  const int M = s.m_faces();
  const int N = s.n_faces();
  const int dm_max = period.periodic_m ? M - 1 : 0;
  const int dn_max = period.periodic_n ? N - 1 : 0;
  std::vector<int> signs{1};
  if (!sf.is_flat()) signs.push_back(-1);
  const MVec twice_center = sf.is_flat() ? MVec() : sf.center(2.0);

  for (int sign : signs) {
    for (int dm = 0; dm <= dm_max; ++dm) {
      for (int dn = 0; dn <= dn_max; ++dn) {
        Grid<MVec> shifted(M + 1, N + 1);
        for (int m = 0; m <= M; ++m) {
          for (int n = 0; n <= N; ++n) {
            const int mm = period.periodic_m ? wrap(m + dm, M) : m;
            const int nn = period.periodic_n ? wrap(n + dn, N) : n;
            const MVec& v = s(mm, nn);
            shifted(m, n) = sign > 0 ? v : twice_center - v;
          }
        }
        const double worst = max_tangent_norm_sq(QuadNet(std::move(shifted)), dual, q);
        if (worst <= tol * scale) {
          out.shift = IndexShift{dm, dn, sign};
          out.shift_tangent_norm_sq = worst;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace isonet

#include "isonet/koenigs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <utility>

namespace isonet {

BiVec mixed_area(const QuadNet& a, const QuadNet& b, FaceIndex f) {
  require_same_dims(a, b);
  const Diagonals da = diagonals(a, f);
  const Diagonals db = diagonals(b, f);
  return 0.25 * (wedge(da.ik, db.jl) + wedge(db.ik, da.jl));
}

DiagonalIntersection diagonal_intersection(const QuadNet& net, FaceIndex f) {
  const auto v = net.face_vertices(f);
  const MVec d1 = v[2] - v[0];
  const MVec d2 = v[3] - v[1];
  const MVec w = v[1] - v[0];
  const double n1 = euclidean_norm(d1);
  const double n2 = euclidean_norm(d2);
  if (n1 == 0.0 || n2 == 0.0) {
    throw GeometryError(ErrorKind::DegenerateFace, "zero-length diagonal",
                        to_string(f));
  }
  const double cross = wedge(d1, d2).norm();
  if (cross <= 1e-12 * n1 * n2) {
    throw GeometryError(ErrorKind::DegenerateFace, "parallel diagonals",
                        to_string(f));
  }
  // Normal equations for min |v_i + a d1 - v_j - b d2|; det = |d1 ^ d2|^2.
  const double d11 = n1 * n1;
  const double d22 = n2 * n2;
  const double d12 = euclidean_dot(d1, d2);
  const double r1 = euclidean_dot(d1, w);
  const double r2 = euclidean_dot(d2, w);
  const double det = cross * cross;
  DiagonalIntersection out;
  out.a = (r1 * d22 - d12 * r2) / det;
  out.b = (d12 * r1 - d11 * r2) / det;
  const MVec p1 = v[0] + out.a * d1;
  const MVec p2 = v[1] + out.b * d2;
  out.point = 0.5 * (p1 + p2);
  out.gap = euclidean_norm(p1 - p2) / std::max(n1, n2);
  return out;
}

CheckReport koenigs_test(const QuadNet& net, double tol) {
  Grid<MVec> points(net.m_faces(), net.n_faces());
  for (FaceIndex f : net.faces()) {
    points(f.m, f.n) = diagonal_intersection(net, f).point;
  }
  CheckReport report;
  report.check = "koenigs";
  report.tolerance = tol;
  for (int m = 1; m < net.m_faces(); ++m) {
    for (int n = 1; n < net.n_faces(); ++n) {
      const std::array<MVec, 4> star{points(m - 1, n - 1), points(m, n - 1),
                                     points(m, n), points(m - 1, n)};
      const auto sv = affine_singular_values(star);
      double residual = 0.0;
      if (sv.size() >= 3 && sv.front() > 0.0) residual = sv[2] / sv.front();
      report.add(residual, to_string(VertexIndex{m, n}));
    }
  }
  report.finalize();
  return report;
}

namespace {

struct DiagonalLink {
  VertexIndex from;
  VertexIndex to;
  double ratio;  // nu_to / nu_from
};

double face_ratio(double t, FaceIndex f) {
  // Intersection at a vertex makes one of the two weights vanish.
  constexpr double kEdge = 1e-12;
  if (std::abs(t) < kEdge || std::abs(1.0 - t) < kEdge) {
    throw GeometryError(ErrorKind::DegenerateFace,
                        "diagonals intersect at a vertex", to_string(f));
  }
  return -(1.0 - t) / t;
}

std::array<double, 6> homogeneous(const MVec& s, double weight, double scale) {
  return {s[0] / weight, s[1] / weight, s[2] / weight,
          s[3] / weight, s[4] / weight, scale / weight};
}

}  // namespace

NuField moutard_lift(const QuadNet& net, double tol, TreeOrder order) {
  const int rows = net.m_faces() + 1;
  const int cols = net.n_faces() + 1;

  std::vector<FaceIndex> faces = net.faces();
  if (order == TreeOrder::ColumnMajor) {
    std::stable_sort(faces.begin(), faces.end(), [](FaceIndex x, FaceIndex y) {
      return x.n != y.n ? x.n < y.n : x.m < y.m;
    });
  }

  Grid<std::vector<DiagonalLink>> adjacency(rows, cols);
  for (FaceIndex f : faces) {
    const auto x = diagonal_intersection(net, f);
    const double rik = face_ratio(x.a, f);
    const double rjl = face_ratio(x.b, f);
    adjacency(f.m, f.n).push_back({f.i(), f.k(), rik});
    adjacency(f.m + 1, f.n + 1).push_back({f.k(), f.i(), 1.0 / rik});
    adjacency(f.m + 1, f.n).push_back({f.j(), f.l(), rjl});
    adjacency(f.m, f.n + 1).push_back({f.l(), f.j(), 1.0 / rjl});
  }

  Grid<double> nu(rows, cols, 0.0);
  Grid<char> seen(rows, cols, 0);
  // One seed per diagonal sublattice; the relative scale of the two is a
  // global scale of the dual.
  for (VertexIndex seed : {VertexIndex{0, 0}, VertexIndex{1, 0}}) {
    nu(seed.m, seed.n) = 1.0;
    seen(seed.m, seed.n) = 1;
    std::deque<VertexIndex> frontier{seed};
    while (!frontier.empty()) {
      VertexIndex v;
      if (order == TreeOrder::RowMajor) {
        v = frontier.front();
        frontier.pop_front();
      } else {
        v = frontier.back();
        frontier.pop_back();
      }
      for (const DiagonalLink& link : adjacency(v.m, v.n)) {
        if (seen(link.to.m, link.to.n)) continue;
        seen(link.to.m, link.to.n) = 1;
        nu(link.to.m, link.to.n) = nu(v.m, v.n) * link.ratio;
        frontier.push_back(link.to);
      }
    }
  }

  NuField out;
  std::string worst;
  const double scale = std::max(net.mean_edge_length(),
                                std::numeric_limits<double>::min());
  for (FaceIndex f : net.faces()) {
    auto mu = [&](VertexIndex v) {
      return homogeneous(net[v], nu(v.m, v.n), scale);
    };
    const auto mi = mu(f.i());
    const auto mj = mu(f.j());
    const auto mk = mu(f.k());
    const auto ml = mu(f.l());
    std::array<double, 6> dik{};
    std::array<double, 6> djl{};
    double nik = 0.0;
    double njl = 0.0;
    for (std::size_t c = 0; c < 6; ++c) {
      dik[c] = mk[c] - mi[c];
      djl[c] = ml[c] - mj[c];
      nik += dik[c] * dik[c];
      njl += djl[c] * djl[c];
    }
    double residual = 0.0;
    if (nik > 0.0 && njl > 0.0) {
      residual = wedge_norm(dik, djl) / std::sqrt(nik * njl);
    }
    if (std::isnan(residual) || residual > out.residual) {
      out.residual = residual;
      worst = to_string(f);
      if (std::isnan(residual)) break;
    }
  }
  out.values = std::move(nu);
  if (!(out.residual <= tol)) {
    throw GeometryError(ErrorKind::NotKoenigs,
                        "no Moutard lift: diagonals of s/nu are not parallel",
                        worst, out.residual);
  }
  return out;
}

NonClosedError::NonClosedError(DualResult result, std::string location)
    : GeometryError(ErrorKind::NonClosed, "dual 1-form is not closed",
                    std::move(location), result.closure_residual),
      result_(std::move(result)) {}

DualResult christoffel_dual(const QuadNet& net, const NuField& nu,
                            std::optional<MVec> base, double tol) {
  const int mf = net.m_faces();
  const int nf = net.n_faces();
  if (nu.values.rows() != mf + 1 || nu.values.cols() != nf + 1) {
    throw GeometryError(ErrorKind::DimensionMismatch,
                        "nu field does not match the net");
  }
  for (double x : nu.values.flat()) {
    if (x == 0.0 || !std::isfinite(x)) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "nu must be finite and nonzero");
    }
  }
  EdgeForm<MVec> omega(mf, nf, EdgeKind::OneForm);
  for (const Edge& e : net.edges()) {
    const VertexIndex a = e.from();
    const VertexIndex b = e.to();
    omega[e] = d(net, e) / (nu.values(a.m, a.n) * nu.values(b.m, b.n));
  }

  DualResult out{QuadNet(mf, nf), base.value_or(net(0, 0)), 0.0};
  QuadNet& dual = out.dual;
  dual(0, 0) = out.base;
  for (int m = 0; m < mf; ++m) dual(m + 1, 0) = dual(m, 0) + omega[{m, 0, Direction::U}];
  for (int m = 0; m <= mf; ++m) {
    for (int n = 0; n < nf; ++n) {
      dual(m, n + 1) = dual(m, n) + omega[{m, n, Direction::V}];
    }
  }

  std::string worst;
  for (FaceIndex f : net.faces()) {
    const MVec& a = omega[{f.m, f.n, Direction::U}];
    const MVec& b = omega[{f.m + 1, f.n, Direction::V}];
    const MVec& c = omega[{f.m, f.n + 1, Direction::U}];
    const MVec& e = omega[{f.m, f.n, Direction::V}];
    const double mean = 0.25 * (euclidean_norm(a) + euclidean_norm(b) +
                                euclidean_norm(c) + euclidean_norm(e));
    const double circulation = euclidean_norm(a + b - c - e);
    const double residual = mean > 0.0 ? circulation / mean : circulation;
    if (residual > out.closure_residual || std::isnan(residual)) {
      out.closure_residual = residual;
      worst = to_string(f);
    }
  }
  if (!(out.closure_residual <= tol)) {
    throw NonClosedError(std::move(out), worst);
  }
  return out;
}

DualPairReport check_dual_pair(const QuadNet& a, const QuadNet& b, double tol) {
  require_same_dims(a, b);
  DualPairReport out;
  out.tolerance = tol;
  out.edge_parallel.check = "edge_parallel";
  out.mixed_area.check = "mixed_area";
  out.diagonal_parallel.check = "diagonal_parallel";
  out.edge_parallel.tolerance = tol;
  out.mixed_area.tolerance = tol;
  out.diagonal_parallel.tolerance = tol;

  for (const Edge& e : a.edges()) {
    out.edge_parallel.add(parallelism_residual(d(a, e), d(b, e)), to_string(e));
  }
  for (FaceIndex f : a.faces()) {
    const double aa = mixed_area(a, a, f).norm();
    const double bb = mixed_area(b, b, f).norm();
    const double ab = mixed_area(a, b, f).norm();
    const double scale = 0.5 * (aa + bb);
    out.mixed_area.add(scale > 0.0 ? ab / scale : 0.0, to_string(f));

    const Diagonals da = diagonals(a, f);
    const Diagonals db = diagonals(b, f);
    out.diagonal_parallel.add(std::max(parallelism_residual(da.ik, db.jl),
                                       parallelism_residual(db.ik, da.jl)),
                              to_string(f));
  }
  out.edge_parallel.finalize();
  out.mixed_area.finalize();
  out.diagonal_parallel.finalize();

  out.pairing_min = std::numeric_limits<double>::infinity();
  out.pairing_max = -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= a.m_faces(); ++m) {
    for (int n = 0; n <= a.n_faces(); ++n) {
      const double p = inner(a(m, n), b(m, n));
      out.pairing_min = std::min(out.pairing_min, p);
      out.pairing_max = std::max(out.pairing_max, p);
    }
  }
  out.criteria_agree = out.mixed_area.passed == out.diagonal_parallel.passed;
  out.passed = out.edge_parallel.passed && out.mixed_area.passed &&
               out.diagonal_parallel.passed;
  return out;
}

RoundTripReport dualize_twice(const QuadNet& net, double tol) {
  const NuField nu1 = moutard_lift(net, tol);
  const DualResult first = christoffel_dual(net, nu1, std::nullopt, tol);
  const NuField nu2 = moutard_lift(first.dual, tol);
  const DualResult second = christoffel_dual(first.dual, nu2, std::nullopt, tol);

  const auto& s = net.vertices().flat();
  const auto& t = second.dual.vertices().flat();
  const double count = static_cast<double>(s.size());
  MVec s_mean;
  MVec t_mean;
  for (std::size_t i = 0; i < s.size(); ++i) {
    s_mean += s[i];
    t_mean += t[i];
  }
  s_mean /= count;
  t_mean /= count;
  double st = 0.0;
  double ss = 0.0;
  double tt = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MVec x = s[i] - s_mean;
    const MVec y = t[i] - t_mean;
    st += euclidean_dot(x, y);
    ss += euclidean_dot(x, x);
    tt += euclidean_dot(y, y);
  }
  RoundTripReport out;
  out.tolerance = tol;
  out.scale = st / ss;
  out.translation = t_mean - out.scale * s_mean;
  double err = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MVec r = t[i] - (out.scale * s[i] + out.translation);
    err += euclidean_dot(r, r);
  }
  out.relative_error = std::sqrt(err / tt);
  out.passed = out.relative_error <= tol;
  return out;
}

}  // namespace isonet

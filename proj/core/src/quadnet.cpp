#include "isonet/quadnet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "isonet/errors.hpp"

namespace isonet {

std::string to_string(VertexIndex v) {
  return "vertex (" + std::to_string(v.m) + "," + std::to_string(v.n) + ")";
}

std::string to_string(FaceIndex f) {
  return "face (" + std::to_string(f.m) + "," + std::to_string(f.n) + ")";
}

std::string to_string(const Edge& e) {
  return std::string(e.dir == Direction::U ? "U" : "V") + "-edge (" +
         std::to_string(e.m) + "," + std::to_string(e.n) + ")";
}

QuadNet::QuadNet(int m_faces, int n_faces) {
  if (m_faces < 1 || n_faces < 1) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "a net needs at least one face in each direction");
  }
  vertices_ = Grid<MVec>(m_faces + 1, n_faces + 1);
}

QuadNet::QuadNet(Grid<MVec> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.rows() < 2 || vertices_.cols() < 2) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "a net needs at least one face in each direction");
  }
}

std::vector<FaceIndex> QuadNet::faces() const {
  std::vector<FaceIndex> out;
  out.reserve(static_cast<std::size_t>(m_faces() * n_faces()));
  for (int m = 0; m < m_faces(); ++m) {
    for (int n = 0; n < n_faces(); ++n) out.push_back({m, n});
  }
  return out;
}

std::vector<Edge> QuadNet::edges() const {
  std::vector<Edge> out;
  for (int m = 0; m < m_faces(); ++m) {
    for (int n = 0; n <= n_faces(); ++n) out.push_back({m, n, Direction::U});
  }
  for (int m = 0; m <= m_faces(); ++m) {
    for (int n = 0; n < n_faces(); ++n) out.push_back({m, n, Direction::V});
  }
  return out;
}

bool QuadNet::valid_face(FaceIndex f) const {
  return f.m >= 0 && f.n >= 0 && f.m < m_faces() && f.n < n_faces();
}

bool QuadNet::valid_edge(const Edge& e) const {
  if (e.m < 0 || e.n < 0) return false;
  if (e.dir == Direction::U) return e.m < m_faces() && e.n <= n_faces();
  return e.m <= m_faces() && e.n < n_faces();
}

std::array<MVec, 4> QuadNet::face_vertices(FaceIndex f) const {
  if (!valid_face(f)) {
    throw GeometryError(ErrorKind::InvalidInput, "face out of range",
                        to_string(f));
  }
  return {(*this)[f.i()], (*this)[f.j()], (*this)[f.k()], (*this)[f.l()]};
}

double QuadNet::mean_edge_length() const {
  double sum = 0.0;
  std::size_t count = 0;
  for (const Edge& e : edges()) {
    sum += euclidean_norm(d(*this, e));
    ++count;
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

void require_same_dims(const QuadNet& a, const QuadNet& b) {
  if (a.m_faces() != b.m_faces() || a.n_faces() != b.n_faces()) {
    throw GeometryError(
        ErrorKind::DimensionMismatch,
        "nets have different dimensions: " + std::to_string(a.m_faces()) + "x" +
            std::to_string(a.n_faces()) + " vs " + std::to_string(b.m_faces()) +
            "x" + std::to_string(b.n_faces()));
  }
}

Diagonals diagonals(const QuadNet& net, FaceIndex f) {
  const auto v = net.face_vertices(f);
  return {v[2] - v[0], v[3] - v[1]};
}

EdgeForm<MVec> differential(const QuadNet& net) {
  EdgeForm<MVec> out(net.m_faces(), net.n_faces(), EdgeKind::OneForm);
  for (const Edge& e : net.edges()) out[e] = d(net, e);
  return out;
}

void CheckReport::add(double residual, std::string location) {
  residuals.push_back(residual);
  locations.push_back(std::move(location));
}

void CheckReport::finalize() {
  max_residual = 0.0;
  worst_location.clear();
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    // NaN residuals fail the check and are reported as the worst item.
    if (std::isnan(residuals[i]) || residuals[i] > max_residual) {
      max_residual = residuals[i];
      worst_location = locations[i];
      if (std::isnan(residuals[i])) break;
    }
  }
  passed = !std::isnan(max_residual) && max_residual <= tolerance;
}

CheckReport check_planar(const QuadNet& net, double tol) {
  CheckReport report;
  report.check = "planar";
  report.tolerance = tol;
  for (FaceIndex f : net.faces()) {
    const auto v = net.face_vertices(f);
    const auto sv = affine_singular_values(v);
    double residual = 0.0;
    if (sv.size() >= 3 && sv.front() > 0.0) residual = sv[2] / sv.front();
    report.add(residual, to_string(f));
  }
  report.finalize();
  return report;
}

CheckReport check_circular(const QuadNet& net, double tol) {
  for (int m = 0; m <= net.m_faces(); ++m) {
    for (int n = 0; n <= net.n_faces(); ++n) {
      const MVec& s = net(m, n);
      const double scale = euclidean_dot(s, s);
      if (std::abs(inner(s, s)) > tol * scale) {
        throw GeometryError(ErrorKind::NotOnQuadric,
                            "vertex is not on the light cone",
                            to_string(VertexIndex{m, n}),
                            scale > 0 ? std::abs(inner(s, s)) / scale : 0.0);
      }
    }
  }
  CheckReport report;
  report.check = "circular";
  report.tolerance = tol;
  for (FaceIndex f : net.faces()) {
    const auto v = net.face_vertices(f);
    const auto sv = linear_singular_values(v);
    double residual = 0.0;
    if (sv.size() >= 4 && sv.front() > 0.0) residual = sv[3] / sv.front();
    report.add(residual, to_string(f));
  }
  report.finalize();
  return report;
}

double cross_ratio(const QuadNet& net, FaceIndex f) {
  const auto v = net.face_vertices(f);
  const MVec& si = v[0];
  const MVec& sj = v[1];
  const MVec& sk = v[2];
  const MVec& sl = v[3];
  const double ij = inner(si, sj);
  const double jk = inner(sj, sk);
  const double kl = inner(sk, sl);
  const double li = inner(sl, si);
  const double ik = inner(si, sk);
  const double jl = inner(sj, sl);
  constexpr double kZero = 1e-14;
  if (std::abs(jk) <= kZero * euclidean_norm(sj) * euclidean_norm(sk) ||
      std::abs(li) <= kZero * euclidean_norm(sl) * euclidean_norm(si)) {
    throw GeometryError(ErrorKind::DegenerateEdge,
                        "coincident vertices in cross ratio denominator",
                        to_string(f));
  }
  const double p_edges_a = std::sqrt(std::abs(ij * kl));
  const double p_edges_b = std::sqrt(std::abs(jk * li));
  const double p_diag = std::sqrt(std::abs(ik * jl));
  const double magnitude = p_edges_a / p_edges_b;
  const bool cyclic_order = p_diag >= std::max(p_edges_a, p_edges_b);
  return cyclic_order ? -magnitude : magnitude;
}

FactorizationResult check_factorization(const QuadNet& net, double tol) {
  const int mf = net.m_faces();
  const int nf = net.n_faces();
  Grid<double> cr(mf, nf);
  for (FaceIndex f : net.faces()) cr(f.m, f.n) = cross_ratio(net, f);

  // cr(m,n) = alpha(m) / beta(n), gauge beta(0) = 1.
  std::vector<double> alpha(static_cast<std::size_t>(mf));
  std::vector<double> beta(static_cast<std::size_t>(nf));
  for (int m = 0; m < mf; ++m) alpha[static_cast<std::size_t>(m)] = cr(m, 0);
  for (int n = 0; n < nf; ++n) beta[static_cast<std::size_t>(n)] = cr(0, 0) / cr(0, n);

  FactorizationResult out;
  out.labels = EdgeForm<double>(mf, nf, EdgeKind::EdgeFunction);
  for (const Edge& e : net.edges()) {
    out.labels[e] = e.dir == Direction::U
                        ? alpha[static_cast<std::size_t>(std::min(e.m, mf - 1))]
                        : beta[static_cast<std::size_t>(std::min(e.n, nf - 1))];
  }
  out.report.check = "factorization";
  out.report.tolerance = tol;
  for (FaceIndex f : net.faces()) {
    const double predicted =
        alpha[static_cast<std::size_t>(f.m)] / beta[static_cast<std::size_t>(f.n)];
    const double actual = cr(f.m, f.n);
    out.report.add(std::abs(actual - predicted) / std::abs(actual), to_string(f));
  }
  out.report.finalize();
  return out;
}

EdgeForm<double> factorizing_labels(const QuadNet& net, double tol) {
  auto result = check_factorization(net, tol);
  if (!result.report.passed) {
    throw GeometryError(ErrorKind::NotIsothermic,
                        "cross ratios do not factorize over edge labels",
                        result.report.worst_location, result.report.max_residual);
  }
  return std::move(result.labels);
}

PeriodicityReport check_periodicity(const QuadNet& net, double tol) {
  PeriodicityReport out;
  out.tolerance = tol;
  const double scale = std::max(net.mean_edge_length(),
                                std::numeric_limits<double>::min());
  const int mf = net.m_faces();
  const int nf = net.n_faces();
  for (int n = 0; n <= nf; ++n) {
    out.m_residual = std::max(out.m_residual,
                              euclidean_norm(net(mf, n) - net(0, n)) / scale);
  }
  for (int m = 0; m <= mf; ++m) {
    out.n_residual = std::max(out.n_residual,
                              euclidean_norm(net(m, nf) - net(m, 0)) / scale);
  }
  out.periodic_m = out.m_residual <= tol;
  out.periodic_n = out.n_residual <= tol;
  return out;
}

}  // namespace isonet

#pragma once

// Finite windows of Z^2 carrying R^{4,1}-valued vertex data: indexing,
// discrete differentials, and the planarity / circularity / cross-ratio
// validators.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "isonet/minkowski.hpp"

namespace isonet {

/// Row-major (m-major) array over vertex indices (m, n), m in [0, rows),
/// n in [0, cols).
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative grid size");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(int m, int n) { return data_[index(m, n)]; }
  const T& operator()(int m, int n) const { return data_[index(m, n)]; }

  T& at(int m, int n) {
    check(m, n);
    return (*this)(m, n);
  }
  const T& at(int m, int n) const {
    check(m, n);
    return (*this)(m, n);
  }

  std::vector<T>& flat() { return data_; }
  const std::vector<T>& flat() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int m, int n) const {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(n);
  }
  void check(int m, int n) const {
    if (m < 0 || n < 0 || m >= rows_ || n >= cols_) {
      throw std::out_of_range("grid index (" + std::to_string(m) + "," +
                              std::to_string(n) + ") out of range");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

struct VertexIndex {
  int m = 0;
  int n = 0;
  friend bool operator==(const VertexIndex&, const VertexIndex&) = default;
};

/// Face with lower-left vertex (m, n). The vertex cycle is fixed as
/// i=(m,n), j=(m+1,n), k=(m+1,n+1), l=(m,n+1).
struct FaceIndex {
  int m = 0;
  int n = 0;

  VertexIndex i() const { return {m, n}; }
  VertexIndex j() const { return {m + 1, n}; }
  VertexIndex k() const { return {m + 1, n + 1}; }
  VertexIndex l() const { return {m, n + 1}; }
  friend bool operator==(const FaceIndex&, const FaceIndex&) = default;
};

/// U edges run (m,n)->(m+1,n); V edges run (m,n)->(m,n+1).
enum class Direction { U, V };

struct Edge {
  int m = 0;
  int n = 0;
  Direction dir = Direction::U;

  VertexIndex from() const { return {m, n}; }
  VertexIndex to() const {
    return dir == Direction::U ? VertexIndex{m + 1, n} : VertexIndex{m, n + 1};
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(VertexIndex v);
std::string to_string(FaceIndex f);
std::string to_string(const Edge& e);

/// An (M+1) x (N+1) array of MVec vertices; M, N >= 1 faces per direction.
class QuadNet {
 public:
  QuadNet(int m_faces, int n_faces);
  explicit QuadNet(Grid<MVec> vertices);

  int m_faces() const { return vertices_.rows() - 1; }
  int n_faces() const { return vertices_.cols() - 1; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  const MVec& operator()(int m, int n) const { return vertices_(m, n); }
  MVec& operator()(int m, int n) { return vertices_(m, n); }
  const MVec& operator[](VertexIndex v) const { return vertices_(v.m, v.n); }
  MVec& operator[](VertexIndex v) { return vertices_(v.m, v.n); }

  const Grid<MVec>& vertices() const { return vertices_; }

  std::vector<FaceIndex> faces() const;
  std::vector<Edge> edges() const;
  bool valid_face(FaceIndex f) const;
  bool valid_edge(const Edge& e) const;

  /// Vertices of a face in the order i, j, k, l.
  std::array<MVec, 4> face_vertices(FaceIndex f) const;

  /// Mean Euclidean length of all edges.
  double mean_edge_length() const;

  friend bool operator==(const QuadNet&, const QuadNet&) = default;

 private:
  Grid<MVec> vertices_;
};

void require_same_dims(const QuadNet& a, const QuadNet& b);

/// Discrete differential dg_ij = g_j - g_i along an edge.
template <class T>
T d(const Grid<T>& g, const Edge& e) {
  const auto a = e.from();
  const auto b = e.to();
  return g.at(b.m, b.n) - g.at(a.m, a.n);
}

/// Edge function g_ij = (g_i + g_j) / 2.
template <class T>
T avg(const Grid<T>& g, const Edge& e) {
  const auto a = e.from();
  const auto b = e.to();
  return (g.at(a.m, a.n) + g.at(b.m, b.n)) * 0.5;
}

inline MVec d(const QuadNet& net, const Edge& e) { return d(net.vertices(), e); }
inline MVec avg(const QuadNet& net, const Edge& e) {
  return avg(net.vertices(), e);
}

struct Diagonals {
  MVec ik;  // s_k - s_i
  MVec jl;  // s_l - s_j
};

Diagonals diagonals(const QuadNet& net, FaceIndex f);

enum class EdgeKind { OneForm, EdgeFunction };

/// Values on the edges of a grid with m_faces x n_faces faces. A OneForm
/// changes sign with orientation; an EdgeFunction does not.
template <class T>
class EdgeForm {
 public:
  EdgeForm() = default;
  EdgeForm(int m_faces, int n_faces, EdgeKind kind, const T& fill = T{})
      : kind_(kind), u_(m_faces, n_faces + 1, fill), v_(m_faces + 1, n_faces, fill) {}

  EdgeKind kind() const { return kind_; }
  int m_faces() const { return u_.rows(); }
  int n_faces() const { return v_.cols(); }

  T& operator[](const Edge& e) {
    return e.dir == Direction::U ? u_.at(e.m, e.n) : v_.at(e.m, e.n);
  }
  const T& operator[](const Edge& e) const {
    return e.dir == Direction::U ? u_.at(e.m, e.n) : v_.at(e.m, e.n);
  }

  /// Value on the oriented edge from -> to (adjacent vertices).
  T oriented(VertexIndex from, VertexIndex to) const {
    const int dm = to.m - from.m;
    const int dn = to.n - from.n;
    Edge e;
    bool reversed = false;
    if (dm == 1 && dn == 0) {
      e = {from.m, from.n, Direction::U};
    } else if (dm == -1 && dn == 0) {
      e = {to.m, to.n, Direction::U};
      reversed = true;
    } else if (dm == 0 && dn == 1) {
      e = {from.m, from.n, Direction::V};
    } else if (dm == 0 && dn == -1) {
      e = {to.m, to.n, Direction::V};
      reversed = true;
    } else {
      throw std::invalid_argument("vertices are not adjacent");
    }
    const T& value = (*this)[e];
    if (reversed && kind_ == EdgeKind::OneForm) return value * -1.0;
    return value;
  }

  const Grid<T>& u_values() const { return u_; }
  const Grid<T>& v_values() const { return v_; }

 private:
  EdgeKind kind_ = EdgeKind::OneForm;
  Grid<T> u_;
  Grid<T> v_;
};

/// The discrete differential of a vertex map as a 1-form.
EdgeForm<MVec> differential(const QuadNet& net);

/// Outcome of an item-wise validator. Every verdict records the tolerance it
/// was judged against.
struct CheckReport {
  std::string check;
  double tolerance = 0.0;
  bool passed = true;
  double max_residual = 0.0;
  std::string worst_location;
  std::vector<double> residuals;
  std::vector<std::string> locations;

  void add(double residual, std::string location);
  void finalize();
};

inline constexpr double kCheckTol = 1e-8;
inline constexpr double kAssertTol = 1e-10;

/// Per face: third singular value ratio of the vertex differences.
CheckReport check_planar(const QuadNet& net, double tol = kCheckTol);

/// Per face: fourth singular value ratio of the four light-cone lifts.
/// Throws NotOnQuadric when a vertex is off the light cone by more than tol
/// (relative to its squared coordinate norm).
CheckReport check_circular(const QuadNet& net, double tol = kCheckTol);

/// Real cross ratio of the four vertices of a face as points of the Moebius
/// quadric. Its magnitude is sqrt(|(s_i,s_j)(s_k,s_l)| / |(s_j,s_k)(s_l,s_i)|);
/// it is negative when the vertex cycle i,j,k,l is in cyclic order on the
/// circle (the diagonal product is the largest Ptolemy product).
double cross_ratio(const QuadNet& net, FaceIndex f);

struct FactorizationResult {
  EdgeForm<double> labels;  // EdgeFunction; constant across opposite edges
  CheckReport report;
};

/// Builds edge labels a with cr = a_ij / a_jk from the boundary row and
/// column, then reports the relative violation on every face.
FactorizationResult check_factorization(const QuadNet& net,
                                        double tol = kCheckTol);

/// As check_factorization, but throws NotIsothermic on failure.
EdgeForm<double> factorizing_labels(const QuadNet& net, double tol = kCheckTol);

struct PeriodicityReport {
  double tolerance = 0.0;
  double m_residual = 0.0;  // max |s(M,n) - s(0,n)| / mean edge length
  double n_residual = 0.0;  // max |s(m,N) - s(m,0)| / mean edge length
  bool periodic_m = false;
  bool periodic_n = false;
};

/// Compares the last row/column of the window with the first (torus
/// fundamental domains are stored with the first row/column repeated).
PeriodicityReport check_periodicity(const QuadNet& net, double tol = kCheckTol);

}  // namespace isonet

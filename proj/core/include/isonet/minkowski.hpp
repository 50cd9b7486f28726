#pragma once

// Linear algebra in R^{4,1} with the fixed signature (+,+,+,+,-).

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace isonet {

inline constexpr std::size_t kAmbientDim = 5;

/// A vector of R^{4,1}; the last coordinate is the timelike one.
class MVec {
 public:
  MVec() = default;
  MVec(double x1, double x2, double x3, double x4, double x5);
  explicit MVec(const std::array<double, kAmbientDim>& c);

  static MVec basis(std::size_t i);

  double operator[](std::size_t i) const { return c_[i]; }
  const std::array<double, kAmbientDim>& components() const { return c_; }

  MVec& operator+=(const MVec& o);
  MVec& operator-=(const MVec& o);
  MVec& operator*=(double a);
  MVec& operator/=(double a);

  friend MVec operator+(MVec a, const MVec& b) { return a += b; }
  friend MVec operator-(MVec a, const MVec& b) { return a -= b; }
  friend MVec operator*(MVec a, double s) { return a *= s; }
  friend MVec operator*(double s, MVec a) { return a *= s; }
  friend MVec operator/(MVec a, double s) { return a /= s; }
  friend MVec operator-(MVec a) { return a *= -1.0; }
  friend bool operator==(const MVec&, const MVec&) = default;

 private:
  std::array<double, kAmbientDim> c_{};
};

/// Minkowski inner product u1v1+u2v2+u3v3+u4v4-u5v5.
double inner(const MVec& u, const MVec& v);

// Coordinate (Euclidean) pairing, used for residual scales only.
double euclidean_dot(const MVec& u, const MVec& v);
double euclidean_norm(const MVec& u);

/// Antisymmetric 2-tensor over R^5, stored by its 10 entries (a,b), a<b.
class BiVec {
 public:
  static constexpr std::size_t kSize = 10;

  BiVec() = default;
  explicit BiVec(const std::array<double, kSize>& c) : c_(c) {}

  /// Entry (a,b) of the full antisymmetric array.
  double operator()(std::size_t a, std::size_t b) const;
  static std::size_t slot(std::size_t a, std::size_t b);

  const std::array<double, kSize>& components() const { return c_; }

  BiVec& operator+=(const BiVec& o);
  BiVec& operator-=(const BiVec& o);
  BiVec& operator*=(double s);

  friend BiVec operator+(BiVec a, const BiVec& b) { return a += b; }
  friend BiVec operator-(BiVec a, const BiVec& b) { return a -= b; }
  friend BiVec operator*(BiVec a, double s) { return a *= s; }
  friend BiVec operator*(double s, BiVec a) { return a *= s; }
  friend bool operator==(const BiVec&, const BiVec&) = default;

  double dot(const BiVec& o) const;
  double norm() const;

 private:
  std::array<double, kSize> c_{};
};

BiVec wedge(const MVec& u, const MVec& v);

struct BivecRatio {
  double ratio = 0.0;
  double residual = 0.0;
};

/// Least-squares factor of A against B under the componentwise pairing,
/// with the relative misfit |A - ratio B| / |B|.
/// Throws DegenerateReference when |B| is zero at machine scale.
BivecRatio bivec_ratio(const BiVec& a, const BiVec& b);

inline constexpr double kDefaultRankTol = 1e-8;

/// Singular values (descending) of the matrix of differences p_i - p_0.
std::vector<double> affine_singular_values(std::span<const MVec> points);
/// Singular values (descending) of the matrix whose columns are the points.
std::vector<double> linear_singular_values(std::span<const MVec> points);

/// Dimension of the affine span: singular values of the difference matrix
/// exceeding tol times the largest one.
int affine_rank(std::span<const MVec> points, double tol = kDefaultRankTol);

/// |u ^ v| for vectors of any dimension, via Lagrange's identity.
double wedge_norm(std::span<const double> u, std::span<const double> v);

/// Sine of the angle between u and v; 0 if either vanishes.
double parallelism_residual(const MVec& u, const MVec& v);

}  // namespace isonet

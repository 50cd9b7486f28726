#include "isonet/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "isonet/errors.hpp"

namespace isonet {

namespace {

void require_finite(const std::array<double, kAmbientDim>& c) {
  for (double x : c) {
    if (!std::isfinite(x)) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "MVec components must be finite");
    }
  }
}

std::vector<double> singular_values(const Eigen::MatrixXd& a) {
  if (a.cols() == 0 || a.rows() == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace

MVec::MVec(double x1, double x2, double x3, double x4, double x5)
    : c_{x1, x2, x3, x4, x5} {
  require_finite(c_);
}

MVec::MVec(const std::array<double, kAmbientDim>& c) : c_(c) {
  require_finite(c_);
}

MVec MVec::basis(std::size_t i) {
  std::array<double, kAmbientDim> c{};
  c.at(i) = 1.0;
  return MVec(c);
}

MVec& MVec::operator+=(const MVec& o) {
  for (std::size_t i = 0; i < kAmbientDim; ++i) c_[i] += o.c_[i];
  return *this;
}

MVec& MVec::operator-=(const MVec& o) {
  for (std::size_t i = 0; i < kAmbientDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

MVec& MVec::operator*=(double a) {
  for (double& x : c_) x *= a;
  return *this;
}

MVec& MVec::operator/=(double a) {
  for (double& x : c_) x /= a;
  return *this;
}

double inner(const MVec& u, const MVec& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3] - u[4] * v[4];
}

double euclidean_dot(const MVec& u, const MVec& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < kAmbientDim; ++i) s += u[i] * v[i];
  return s;
}

double euclidean_norm(const MVec& u) { return std::sqrt(euclidean_dot(u, u)); }

std::size_t BiVec::slot(std::size_t a, std::size_t b) {
  // Row-major enumeration of the strict upper triangle of a 5x5 array.
  static constexpr std::size_t kOffset[kAmbientDim] = {0, 4, 7, 9, 10};
  return kOffset[a] + (b - a - 1);
}

double BiVec::operator()(std::size_t a, std::size_t b) const {
  if (a == b) return 0.0;
  return a < b ? c_[slot(a, b)] : -c_[slot(b, a)];
}

BiVec& BiVec::operator+=(const BiVec& o) {
  for (std::size_t i = 0; i < kSize; ++i) c_[i] += o.c_[i];
  return *this;
}

BiVec& BiVec::operator-=(const BiVec& o) {
  for (std::size_t i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
  return *this;
}

BiVec& BiVec::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

double BiVec::dot(const BiVec& o) const {
  double s = 0.0;
  for (std::size_t i = 0; i < kSize; ++i) s += c_[i] * o.c_[i];
  return s;
}

double BiVec::norm() const { return std::sqrt(dot(*this)); }

BiVec wedge(const MVec& u, const MVec& v) {
  std::array<double, BiVec::kSize> c{};
  for (std::size_t a = 0; a < kAmbientDim; ++a) {
    for (std::size_t b = a + 1; b < kAmbientDim; ++b) {
      c[BiVec::slot(a, b)] = u[a] * v[b] - u[b] * v[a];
    }
  }
  return BiVec(c);
}

BivecRatio bivec_ratio(const BiVec& a, const BiVec& b) {
  const double bb = b.dot(b);
  const double bn = std::sqrt(bb);
  const double scale = std::max(a.norm(), bn);
  if (bn <= std::numeric_limits<double>::min() ||
      bn <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    throw GeometryError(ErrorKind::DegenerateReference,
                        "reference bivector vanishes");
  }
  BivecRatio out;
  out.ratio = a.dot(b) / bb;
  out.residual = (a - out.ratio * b).norm() / bn;
  return out;
}

std::vector<double> affine_singular_values(std::span<const MVec> points) {
  if (points.size() < 2) return {};
  Eigen::MatrixXd d(kAmbientDim, static_cast<Eigen::Index>(points.size() - 1));
  for (std::size_t j = 1; j < points.size(); ++j) {
    for (std::size_t i = 0; i < kAmbientDim; ++i) {
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j - 1)) =
          points[j][i] - points[0][i];
    }
  }
  return singular_values(d);
}

std::vector<double> linear_singular_values(std::span<const MVec> points) {
  Eigen::MatrixXd d(kAmbientDim, static_cast<Eigen::Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < kAmbientDim; ++i) {
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          points[j][i];
    }
  }
  return singular_values(d);
}

int affine_rank(std::span<const MVec> points, double tol) {
  const auto sv = affine_singular_values(points);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = tol * sv.front();
  return static_cast<int>(
      std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

double wedge_norm(std::span<const double> u, std::span<const double> v) {
  const std::size_t n = std::min(u.size(), v.size());
  double s = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double w = u[a] * v[b] - u[b] * v[a];
      s += w * w;
    }
  }
  return std::sqrt(s);
}

double parallelism_residual(const MVec& u, const MVec& v) {
  const double nu = euclidean_norm(u);
  const double nv = euclidean_norm(v);
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return wedge(u, v).norm() / (nu * nv);
}

}  // namespace isonet

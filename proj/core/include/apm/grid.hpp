#pragma once

// Periodic structured grids, sampled field containers, centered
// finite-difference stencils and integral/norm helpers. Everything here is a
// pure function of its inputs; fields are plain value types.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace apm {

inline constexpr double two_pi = 6.283185307179586476925286766559;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Uniform periodic grid on [0, length)^dim with dim = 1 or 2.
///
/// Index arithmetic wraps modulo n on every axis. Storage convention for
/// fields living on the grid is row-major with axis order (x, y):
/// linear index = i*ny + j.
class PeriodicGrid {
 public:
  static PeriodicGrid line(int n, double length = two_pi);
  static PeriodicGrid square(int n, double length = two_pi);

  int dim() const { return dim_; }
  int n(int axis) const { return n_[axis]; }
  double length(int axis) const { return length_[axis]; }
  double h(int axis) const { return length_[axis] / n_[axis]; }
  std::size_t size() const { return std::size_t(n_[0]) * std::size_t(n_[1]); }

  int wrap(int i, int axis) const {
    const int n = n_[axis];
    i %= n;
    return i < 0 ? i + n : i;
  }
  std::size_t index(int i, int j = 0) const {
    return std::size_t(wrap(i, 0)) * std::size_t(n_[1]) + std::size_t(wrap(j, 1));
  }
  double x(int i) const { return h(0) * i; }
  double y(int j) const { return h(1) * j; }
  Point2 point(int i, int j = 0) const { return {x(i), dim_ == 2 ? y(j) : 0.0}; }
  /// Cell volume h^dim.
  double cell_volume() const { return dim_ == 2 ? h(0) * h(1) : h(0); }

  bool operator==(const PeriodicGrid&) const = default;

 private:
  PeriodicGrid(int dim, std::array<int, 2> n, std::array<double, 2> length);

  int dim_ = 1;
  std::array<int, 2> n_{8, 1};
  std::array<double, 2> length_{two_pi, two_pi};
};

/// Real samples on a PeriodicGrid, row-major with x as the outer axis.
class ScalarField {
 public:
  explicit ScalarField(const PeriodicGrid& grid, double fill = 0.0);

  /// Sample an analytic function at the grid points.
  static ScalarField sample(const PeriodicGrid& grid,
                            const std::function<double(Point2)>& f);

  const PeriodicGrid& grid() const { return grid_; }
  double& operator()(int i, int j = 0) { return v_[grid_.index(i, j)]; }
  double operator()(int i, int j = 0) const { return v_[grid_.index(i, j)]; }
  double& operator[](std::size_t k) { return v_[k]; }
  double operator[](std::size_t k) const { return v_[k]; }
  std::span<double> values() { return v_; }
  std::span<const double> values() const { return v_; }
  std::size_t size() const { return v_.size(); }

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double a);
  /// this += a * other
  ScalarField& add_scaled(double a, const ScalarField& other);

  bool all_finite() const;

 private:
  PeriodicGrid grid_;
  std::vector<double> v_;
};

/// Two velocity components sharing one grid.
struct VectorField2D {
  ScalarField x;
  ScalarField y;

  explicit VectorField2D(const PeriodicGrid& grid) : x(grid), y(grid) {}
  VectorField2D(ScalarField xc, ScalarField yc);
  const PeriodicGrid& grid() const { return x.grid(); }
};

/// Centered finite-difference derivative along `axis` of the given order
/// (1 or 2) and accuracy (2 or 4), with periodic wrap at the edges.
ScalarField fd_derivative(const ScalarField& f, int axis, int order, int accuracy);

/// Sum of the axis-wise second derivatives at the requested accuracy.
ScalarField laplacian(const ScalarField& f, int accuracy);

/// h^dim-weighted Riemann sum of f (times `weight` when given). The weight
/// must live on the same grid.
double integrate(const ScalarField& f, const ScalarField* weight = nullptr);

enum class NormKind { Linf, L2 };

/// Norm of f restricted to the points where mask == 1. L2 carries the h^dim
/// volume weight. Throws on an all-zero or non-binary mask.
double masked_norm(const ScalarField& f, const ScalarField& mask, NormKind kind);

double max_abs(const ScalarField& f);

/// Text dump: header "# scalar nx=<n> ny=<n> h=<h>" followed by one value
/// per line, row-major, full-precision decimal. 1D fields carry ny=1.
void write_field(const std::string& path, const ScalarField& f);
ScalarField read_field(const std::string& path);

}  // namespace apm

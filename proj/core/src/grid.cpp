#include "apm/grid.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apm {

PeriodicGrid::PeriodicGrid(int dim, std::array<int, 2> n, std::array<double, 2> length)
    : dim_(dim), n_(n), length_(length) {
  for (int a = 0; a < dim_; ++a) {
    if (n_[a] < 8) throw std::invalid_argument("PeriodicGrid: n must be >= 8");
    if (length_[a] <= 0.0) throw std::invalid_argument("PeriodicGrid: length must be > 0");
  }
}

PeriodicGrid PeriodicGrid::line(int n, double length) {
  return PeriodicGrid(1, {n, 1}, {length, length});
}

PeriodicGrid PeriodicGrid::square(int n, double length) {
  return PeriodicGrid(2, {n, n}, {length, length});
}

ScalarField::ScalarField(const PeriodicGrid& grid, double fill)
    : grid_(grid), v_(grid.size(), fill) {}

ScalarField ScalarField::sample(const PeriodicGrid& grid,
                                const std::function<double(Point2)>& f) {
  ScalarField out(grid);
  for (int i = 0; i < grid.n(0); ++i)
    for (int j = 0; j < grid.n(1); ++j)
      out(i, j) = f(grid.point(i, j));
  return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("field grid mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += other.v_[k];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("field grid mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= other.v_[k];
  return *this;
}

ScalarField& ScalarField::operator*=(double a) {
  for (double& v : v_) v *= a;
  return *this;
}

ScalarField& ScalarField::add_scaled(double a, const ScalarField& other) {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("field grid mismatch");
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += a * other.v_[k];
  return *this;
}

bool ScalarField::all_finite() const {
  for (double v : v_)
    if (!std::isfinite(v)) return false;
  return true;
}

VectorField2D::VectorField2D(ScalarField xc, ScalarField yc)
    : x(std::move(xc)), y(std::move(yc)) {
  if (!(x.grid() == y.grid()))
    throw std::invalid_argument("VectorField2D: components on different grids");
}

namespace {

struct Stencil {
  // symmetric offsets: c0*f_i + sum_m c[m]*(f_{i+m} +/- f_{i-m})
  double c0;
  std::array<double, 2> c;  // offsets 1, 2
  bool antisymmetric;       // first derivative stencils
  int reach;
};

Stencil make_stencil(int order, int accuracy, double h) {
  if (order == 1 && accuracy == 2)
    return {0.0, {1.0 / (2.0 * h), 0.0}, true, 1};
  if (order == 1 && accuracy == 4)
    return {0.0, {8.0 / (12.0 * h), -1.0 / (12.0 * h)}, true, 2};
  if (order == 2 && accuracy == 2)
    return {-2.0 / (h * h), {1.0 / (h * h), 0.0}, false, 1};
  if (order == 2 && accuracy == 4)
    return {-30.0 / (12.0 * h * h), {16.0 / (12.0 * h * h), -1.0 / (12.0 * h * h)}, false, 2};
  throw std::invalid_argument("fd_derivative: order must be 1 or 2, accuracy 2 or 4");
}

}  // namespace

ScalarField fd_derivative(const ScalarField& f, int axis, int order, int accuracy) {
  const PeriodicGrid& g = f.grid();
  if (axis < 0 || axis >= g.dim())
    throw std::invalid_argument("fd_derivative: invalid axis for grid dim");
  const Stencil st = make_stencil(order, accuracy, g.h(axis));

  ScalarField out(g);
  const int nx = g.n(0), ny = g.n(1);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      double acc = st.c0 * f(i, j);
      for (int m = 1; m <= st.reach; ++m) {
        const double fp = axis == 0 ? f(i + m, j) : f(i, j + m);
        const double fm = axis == 0 ? f(i - m, j) : f(i, j - m);
        acc += st.c[m - 1] * (st.antisymmetric ? fp - fm : fp + fm);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ScalarField laplacian(const ScalarField& f, int accuracy) {
  ScalarField out = fd_derivative(f, 0, 2, accuracy);
  if (f.grid().dim() == 2) out += fd_derivative(f, 1, 2, accuracy);
  return out;
}

double integrate(const ScalarField& f, const ScalarField* weight) {
  if (weight && !(weight->grid() == f.grid()))
    throw std::invalid_argument("integrate: weight grid mismatch");
  double sum = 0.0;
  if (weight) {
    for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * (*weight)[k];
  } else {
    for (std::size_t k = 0; k < f.size(); ++k) sum += f[k];
  }
  return sum * f.grid().cell_volume();
}

double masked_norm(const ScalarField& f, const ScalarField& mask, NormKind kind) {
  if (!(mask.grid() == f.grid()))
    throw std::invalid_argument("masked_norm: mask grid mismatch");
  std::size_t count = 0;
  double linf = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double m = mask[k];
    if (m != 0.0 && m != 1.0)
      throw std::invalid_argument("masked_norm: mask values must be 0 or 1");
    if (m == 1.0) {
      ++count;
      const double a = std::abs(f[k]);
      if (a > linf) linf = a;
      sq += f[k] * f[k];
    }
  }
  if (count == 0) throw std::invalid_argument("masked_norm: empty region");
  return kind == NormKind::Linf ? linf : std::sqrt(sq * f.grid().cell_volume());
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

void write_field(const std::string& path, const ScalarField& f) {
  const PeriodicGrid& g = f.grid();
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("write_field: cannot open " + tmp);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", g.h(0));
    out << "# scalar nx=" << g.n(0) << " ny=" << (g.dim() == 2 ? g.n(1) : 1)
        << " h=" << buf << "\n";
    for (double v : f.values()) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf << "\n";
    }
  }
  std::filesystem::rename(tmp, path);
}

ScalarField read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_field: cannot open " + path);
  std::string header;
  std::getline(in, header);
  int nx = 0, ny = 0;
  double h = 0.0;
  if (std::sscanf(header.c_str(), "# scalar nx=%d ny=%d h=%lf", &nx, &ny, &h) != 3)
    throw std::runtime_error("read_field: bad header in " + path);
  PeriodicGrid g = ny > 1 ? PeriodicGrid::square(nx, nx * h) : PeriodicGrid::line(nx, nx * h);
  ScalarField f(g);
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!(in >> f[k])) throw std::runtime_error("read_field: truncated data in " + path);
  return f;
}

}  // namespace apm

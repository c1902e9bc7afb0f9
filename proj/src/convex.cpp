#include <gaugeint/convex.hpp>

#include <cmath>
#include <numbers>

namespace gaugeint {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix grid_1d() {
  Matrix m(1, 2);
  m(0, 0) = 1.0;
  m(0, 1) = -1.0;
  return m;
}

Matrix grid_2d(Eigen::Index count) {
  Matrix m(2, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    const double theta = 2.0 * kPi * static_cast<double>(j) /
                         static_cast<double>(count);
    m(0, j) = std::cos(theta);
    m(1, j) = std::sin(theta);
  }
  return m;
}

Matrix grid_fibonacci_sphere(Eigen::Index count) {
  // Golden-angle spiral; standard quasi-uniform covering of S^2.
  constexpr double kGoldenConj = 0.6180339887498949;
  Matrix m(3, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    const double z =
        1.0 - 2.0 * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * kPi * kGoldenConj * static_cast<double>(j);
    m(0, j) = r * std::cos(phi);
    m(1, j) = r * std::sin(phi);
    m(2, j) = z;
  }
  return m;
}

Matrix grid_quasirandom(int dim, Eigen::Index count) {
  // Box-Muller over a splitmix64 stream keyed on (dim, count): identical on
  // every platform, no libm distribution dependence.
  std::uint64_t state = 0x6a09e667f3bcc908ULL ^
                        (static_cast<std::uint64_t>(dim) << 32) ^
                        static_cast<std::uint64_t>(count);
  auto next_unit = [&state]() {
    return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
  };
  Matrix m(dim, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    Vector v(dim);
    for (int i = 0; i < dim; i += 2) {
      const double u1 = next_unit();
      const double u2 = next_unit();
      const double rad = std::sqrt(-2.0 * std::log(u1));
      v[i] = rad * std::cos(2.0 * kPi * u2);
      if (i + 1 < dim) v[i + 1] = rad * std::sin(2.0 * kPi * u2);
    }
    double n = v.norm();
    if (n < 1e-12) {
      v.setZero();
      v[0] = 1.0;
      n = 1.0;
    }
    m.col(j) = v / n;
  }
  return m;
}

}  // namespace

GridPtr make_direction_grid(int dim, Eigen::Index count) {
  check_dim(dim);
  auto grid = std::make_shared<DirectionGrid>();
  grid->dimension = dim;
  if (dim == 1) {
    grid->directions = grid_1d();
    grid->angular_gap = 0.0;
    return grid;
  }
  if (count <= 0) count = (dim == 2) ? 720 : 2000;
  if (dim == 2) {
    grid->directions = grid_2d(count);
    grid->angular_gap = kPi / static_cast<double>(count);
  } else if (dim == 3) {
    grid->directions = grid_fibonacci_sphere(count);
    grid->angular_gap = 1.5 * 2.4 / std::sqrt(static_cast<double>(count));
  } else {
    grid->directions = grid_quasirandom(dim, count);
    const double exponent = -1.0 / static_cast<double>(dim - 1);
    grid->angular_gap =
        std::min(kPi, 1.5 * 2.4 * std::sqrt(static_cast<double>(dim - 1)) *
                          std::pow(static_cast<double>(count), exponent));
  }
  return grid;
}

double support(const Vector& u, const Segment& s) {
  check_same_dim(u, s.endpoint, "support(segment)");
  return std::max(u.dot(s.endpoint), 0.0);
}

double support(const Vector& u, const Zonotope& z) {
  if (u.size() != z.dim())
    throw std::invalid_argument("support(zonotope): dimension mismatch");
  double total = 0.0;
  for (const auto& g : z.generators) total += std::max(u.dot(g), 0.0);
  return total;
}

double support(const Vector& u, const VPolytope& p) {
  if (u.size() != p.dim())
    throw std::invalid_argument("support(polytope): dimension mismatch");
  double best = u.dot(p.vertices.front());
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    best = std::max(best, u.dot(p.vertices[i]));
  return best;
}

namespace {

void check_grid(int set_dim, const GridPtr& grid, const char* where) {
  if (!grid) throw std::invalid_argument(std::string(where) + ": null grid");
  if (grid->dim() != set_dim)
    throw std::invalid_argument(std::string(where) +
                                ": grid/set dimension mismatch");
}

void check_same_grid(const SupportVector& a, const SupportVector& b,
                     const char* where) {
  if (!a.grid || !b.grid)
    throw std::invalid_argument(std::string(where) + ": null grid");
  if (a.grid != b.grid && !a.grid->same_as(*b.grid))
    throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace

SupportVector embed(const Segment& s, const GridPtr& grid) {
  check_grid(s.dim(), grid, "embed(segment)");
  SupportVector out;
  out.grid = grid;
  out.values = (s.endpoint.transpose() * grid->directions)
                   .transpose()
                   .cwiseMax(0.0);
  out.radius_bound = s.endpoint.norm();
  return out;
}

SupportVector embed(const Zonotope& z, const GridPtr& grid) {
  check_grid(z.dim(), grid, "embed(zonotope)");
  SupportVector out;
  out.grid = grid;
  out.values = Vector::Zero(grid->size());
  out.radius_bound = 0.0;
  for (const auto& g : z.generators) {
    out.values +=
        (g.transpose() * grid->directions).transpose().cwiseMax(0.0).eval();
    out.radius_bound += g.norm();
  }
  return out;
}

SupportVector embed(const VPolytope& p, const GridPtr& grid) {
  check_grid(p.dim(), grid, "embed(polytope)");
  SupportVector out;
  out.grid = grid;
  out.values = (p.vertices.front().transpose() * grid->directions).transpose();
  out.radius_bound = p.vertices.front().norm();
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    out.values = out.values.cwiseMax(
        (p.vertices[i].transpose() * grid->directions).transpose());
    out.radius_bound = std::max(out.radius_bound, p.vertices[i].norm());
  }
  return out;
}

SupportVector minkowski_add(const SupportVector& a, const SupportVector& b) {
  check_same_grid(a, b, "minkowski_add");
  SupportVector out;
  out.grid = a.grid;
  out.values = a.values + b.values;
  out.radius_bound = a.radius_bound + b.radius_bound;
  return out;
}

SupportVector convex_union(const SupportVector& a, const SupportVector& b) {
  check_same_grid(a, b, "convex_union");
  SupportVector out;
  out.grid = a.grid;
  out.values = a.values.cwiseMax(b.values);
  out.radius_bound = std::max(a.radius_bound, b.radius_bound);
  return out;
}

HausdorffInterval hausdorff_grid(const SupportVector& a,
                                 const SupportVector& b) {
  check_same_grid(a, b, "hausdorff_grid");
  HausdorffInterval out;
  out.distance = (a.values - b.values).cwiseAbs().maxCoeff();
  out.error_bound = (a.radius_bound + b.radius_bound) * 2.0 *
                    std::sin(a.grid->angular_gap / 2.0);
  return out;
}

double point_segment_distance(const Vector& p, const Vector& e) {
  check_same_dim(p, e, "point_segment_distance");
  const double ee = e.squaredNorm();
  if (ee == 0.0) return p.norm();
  const double t = std::clamp(p.dot(e) / ee, 0.0, 1.0);
  return (p - t * e).norm();
}

double hausdorff_segments(const Vector& x, const Vector& y) {
  check_same_dim(x, y, "hausdorff_segments");
  return std::max(point_segment_distance(x, y), point_segment_distance(y, x));
}

double set_norm(const Segment& s) { return s.endpoint.norm(); }

double set_norm(const Zonotope& z) {
  double total = 0.0;
  for (const auto& g : z.generators) total += g.norm();
  return total;
}

double set_norm(const VPolytope& p) {
  double best = 0.0;
  for (const auto& v : p.vertices) best = std::max(best, v.norm());
  return best;
}

NormBounds zonotope_norm_bounds(const Zonotope& z) {
  NormBounds out;
  out.upper = set_norm(z);
  const std::size_t n = z.generators.size();
  if (n == 0) return out;
  if (n <= 20) {
    // ||.|| is convex on the generator box, so the sup sits at a vertex.
    Vector sum = Vector::Zero(z.dim());
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      sum.setZero();
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ULL << i)) sum += z.generators[i];
      out.lower = std::max(out.lower, sum.norm());
    }
    return out;
  }
  const auto grid = make_direction_grid(z.dim());
  const auto sv = embed(z, grid);
  out.lower = sv.values.maxCoeff();
  return out;
}

}  // namespace gaugeint

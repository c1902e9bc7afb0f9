// Calculus of convex compact subsets of R^d through support functions:
// segments conv{0,x}, zonotopes, V-polytopes, direction grids and the
// embedding A -> s(.,A) that turns Minkowski arithmetic into pointwise
// arithmetic on grid samples.
#pragma once

#include <gaugeint/common.hpp>

#include <memory>
#include <optional>

namespace gaugeint {

// The set conv{0, endpoint}.
struct Segment {
  Vector endpoint;

  explicit Segment(Vector e) : endpoint(std::move(e)) {
    check_dim(static_cast<int>(endpoint.size()));
  }
  int dim() const { return static_cast<int>(endpoint.size()); }
};

// Minkowski sum of segments: { sum_k a_k g_k : a_k in [0,1] }.
// An empty generator list is the singleton {0}; `dim` disambiguates it.
struct Zonotope {
  int dimension = 1;
  std::vector<Vector> generators;

  Zonotope() = default;
  explicit Zonotope(int d) : dimension(d) { check_dim(d); }
  Zonotope(int d, std::vector<Vector> gens)
      : dimension(d), generators(std::move(gens)) {
    check_dim(d);
    for (const auto& g : generators)
      if (g.size() != d)
        throw std::invalid_argument("Zonotope: generator dimension mismatch");
  }
  int dim() const { return dimension; }
};

// Convex hull of a nonempty vertex list.
struct VPolytope {
  std::vector<Vector> vertices;

  explicit VPolytope(std::vector<Vector> verts) : vertices(std::move(verts)) {
    if (vertices.empty())
      throw std::invalid_argument("VPolytope: vertex list must be nonempty");
    check_dim(static_cast<int>(vertices.front().size()));
    for (const auto& v : vertices)
      if (v.size() != vertices.front().size())
        throw std::invalid_argument("VPolytope: vertex dimension mismatch");
  }
  int dim() const { return static_cast<int>(vertices.front().size()); }
};

// Finite surrogate for the dual unit sphere: unit directions packed as
// columns, plus an upper bound on the angle from any unit vector to the
// nearest column.
//   d = 1 : {+1, -1}, angular_gap 0 (grid results are exact);
//   d = 2 : m equally spaced angles, angular_gap pi/m;
//   d = 3 : Fibonacci sphere, angular_gap 1.5 * 2.4/sqrt(m)  (heuristic with
//           a conservative safety factor);
//   d >= 4: deterministic quasi-random points; angular_gap is the analogous
//           covering heuristic and should be treated as indicative only.
struct DirectionGrid {
  int dimension = 1;
  Matrix directions;  // d x m, unit columns
  double angular_gap = 0.0;

  int dim() const { return dimension; }
  Eigen::Index size() const { return directions.cols(); }
  Vector direction(Eigen::Index j) const { return directions.col(j); }

  bool same_as(const DirectionGrid& other) const {
    return dimension == other.dimension && angular_gap == other.angular_gap &&
           directions.rows() == other.directions.rows() &&
           directions.cols() == other.directions.cols() &&
           directions == other.directions;
  }
};

using GridPtr = std::shared_ptr<const DirectionGrid>;

// Builds the deterministic grid for a given dimension.  `count` is ignored
// for d=1.  Defaults: 720 directions for d=2, 2000 for d=3 and above.
GridPtr make_direction_grid(int dim, Eigen::Index count = 0);

// A convex set's support function sampled on a grid, together with an upper
// bound on the set-norm |A| = sup{||x|| : x in A}.  This is the common
// currency for comparing sets of different representations.
struct SupportVector {
  GridPtr grid;
  Vector values;
  double radius_bound = 0.0;

  Eigen::Index size() const { return values.size(); }
};

struct HausdorffInterval {
  double distance = 0.0;     // max over grid directions of |s_A - s_B|
  double error_bound = 0.0;  // the true d_H lies in [distance, distance+bound]
};

// -- support functions -------------------------------------------------

// s(u, conv{0,x}) = <u,x>^+
double support(const Vector& u, const Segment& s);
// s(u, Z) = sum_k <u,g_k>^+
double support(const Vector& u, const Zonotope& z);
// s(u, P) = max_v <u,v>
double support(const Vector& u, const VPolytope& p);

// -- embedding and grid arithmetic -------------------------------------

SupportVector embed(const Segment& s, const GridPtr& grid);
SupportVector embed(const Zonotope& z, const GridPtr& grid);
SupportVector embed(const VPolytope& p, const GridPtr& grid);

// Pointwise sum of support values == support of the Minkowski sum.
SupportVector minkowski_add(const SupportVector& a, const SupportVector& b);
// Pointwise max == support of cl conv(A u B).
SupportVector convex_union(const SupportVector& a, const SupportVector& b);

// Grid Hausdorff distance with its certified enclosure width.  The bound is
// (|A| + |B|) * 2 sin(gap/2), from the Lipschitz estimate
// |s(u,A) - s(v,A)| <= |A| ||u - v||.
HausdorffInterval hausdorff_grid(const SupportVector& a,
                                 const SupportVector& b);

// -- exact quantities ---------------------------------------------------

// Euclidean distance from p to conv{0, e}.
double point_segment_distance(const Vector& p, const Vector& e);

// Exact d_H(conv{0,x}, conv{0,y}) = max(dist(x, conv{0,y}),
// dist(y, conv{0,x})).  Valid because t -> dist(t, C) is convex along a
// segment, so its sup over conv{0,x} is attained at an endpoint, and the
// endpoint 0 lies in both sets.
double hausdorff_segments(const Vector& x, const Vector& y);

// |C| = sup of Euclidean norms over the set.
double set_norm(const Segment& s);
// For zonotopes the returned value is the upper bound sum_k ||g_k||;
// zonotope_norm_bounds gives a certified [lower, upper] pair.
double set_norm(const Zonotope& z);
double set_norm(const VPolytope& p);

struct NormBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// lower: exact vertex enumeration for <= 20 generators, otherwise a grid
// search over support directions; upper: sum of generator norms.
NormBounds zonotope_norm_bounds(const Zonotope& z);

}  // namespace gaugeint

// Shared basics: scalar/vector aliases, error types, the breakpoint tie
// rule used by every piecewise-defined object, and a reproducible RNG.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaugeint {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr int kMaxDim = 64;

// Thrown when the Cousin bisection exceeds its depth budget; the gauge is
// too singular for the requested resolution.
class DepthExceeded : public std::runtime_error {
 public:
  explicit DepthExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline void check_dim(int d) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("dimension must be in [1, " +
                                std::to_string(kMaxDim) + "], got " +
                                std::to_string(d));
}

inline void check_same_dim(const Vector& a, const Vector& b,
                           const char* where) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
}

// Piece lookup for a sorted breakpoint list partitioning [0,1] into
// [0,b1], (b1,b2], ..., (bk,1].  A query at a breakpoint lands in the left
// piece; t=0 lands in the first piece.  This single definition is shared by
// step gauges, step integrands and scalar weights so ties resolve the same
// way everywhere.
inline std::size_t piece_index(const std::vector<double>& breakpoints,
                               double t) {
  return static_cast<std::size_t>(
      std::lower_bound(breakpoints.begin(), breakpoints.end(), t) -
      breakpoints.begin());
}

// splitmix64: tiny, stateless, identical on every platform.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG with explicit bit-to-double conversion.  The standard
// distributions are not pinned down by the standard, so we avoid them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0xd1b54a32d192ed03ULL) {}

  std::uint64_t bits() { return splitmix64(state_); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return bits() % n; }

  Vector vector(int dim, double lo, double hi) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gaugeint

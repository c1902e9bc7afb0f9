// Vector-valued integrands on [0,1], scalar step weights, and the
// determined multifunctions G(t) = conv{0, g(t)}.
#pragma once

#include <gaugeint/common.hpp>
#include <gaugeint/convex.hpp>

#include <functional>
#include <optional>

namespace gaugeint {

// Piecewise-constant vector function; pieces cover [0,1] and evaluation at
// a breakpoint uses the left piece (the rule shared with Gauge::Step and
// ScalarStepFunction via piece_index).
struct StepVectorFunction {
  int dimension = 1;
  std::vector<double> breakpoints;  // sorted, strictly inside (0,1)
  std::vector<Vector> values;       // one per piece: breakpoints.size() + 1

  StepVectorFunction(int dim, std::vector<double> breaks,
                     std::vector<Vector> vals);

  int dim() const { return dimension; }
  std::size_t pieces() const { return values.size(); }
  std::size_t piece(double t) const { return piece_index(breakpoints, t); }
  double piece_lo(std::size_t k) const {
    return k == 0 ? 0.0 : breakpoints[k - 1];
  }
  double piece_hi(std::size_t k) const {
    return k == breakpoints.size() ? 1.0 : breakpoints[k];
  }
  double piece_measure(std::size_t k) const {
    return piece_hi(k) - piece_lo(k);
  }
  Vector operator()(double t) const;
};

// Piecewise-constant scalar function with the same tie rule.
struct ScalarStepFunction {
  std::vector<double> breakpoints;
  std::vector<double> values;

  ScalarStepFunction(std::vector<double> breaks, std::vector<double> vals);
  static ScalarStepFunction constant(double v) { return {{}, {v}}; }

  double operator()(double t) const {
    return values[piece_index(breakpoints, t)];
  }
  double min_value() const;
  double max_value() const;
};

// A weight in the selection family M: step function with values in [0,1].
using ScalarWeight = ScalarStepFunction;

// The derivative of F(t) = t^2 sin(1/t^2), F(0) = 0.  Differentiable
// everywhere with unbounded variation near 0: the standard witness for
// "Henstock but not McShane integrable".  Its Henstock integral over [0,1]
// is F(1) - F(0) = sin(1).
double pathological_derivative_value(double t);
double pathological_primitive(double t);

// Evaluable vector integrand: either an exact step function, the
// pathological derivative, or a bounded-step multiple of another integrand.
// Step-by-step products stay exact steps so the Pettis oracle remains exact.
class Integrand {
 public:
  static Integrand from_step(StepVectorFunction s);
  static Integrand constant(Vector x);
  static Integrand pathological_derivative();
  // Pointwise product t -> alpha(t) * inner(t).
  static Integrand scaled(const ScalarStepFunction& alpha,
                          const Integrand& inner);
  // Pointwise sum; step + step merges into an exact step function.
  static Integrand sum(const Integrand& a, const Integrand& b);

  int dim() const { return dim_; }
  Vector operator()(double t) const;
  // Non-null when the integrand is exactly a step function.
  const StepVectorFunction* step() const {
    return step_ ? &*step_ : nullptr;
  }
  // True for integrands whose oscillation near 0 needs a singular schedule.
  bool singular() const { return singular_; }
  const std::string& describe() const { return desc_; }

 private:
  Integrand() = default;
  int dim_ = 1;
  bool singular_ = false;
  std::function<Vector(double)> eval_;
  std::optional<StepVectorFunction> step_;
  std::string desc_;
};

// G(t) = conv{0, g(t)}; positive by construction.
struct DeterminedMF {
  Integrand g;

  int dim() const { return g.dim(); }
  Segment at(double t) const { return Segment(g(t)); }
};

inline DeterminedMF determined(Integrand g) { return DeterminedMF{std::move(g)}; }

// Selections of determined(g) are the products w * g with w: [0,1] -> [0,1].
Integrand selection(const ScalarWeight& w, const Integrand& g);

// Bounded measurable multiplier (values in [-M, M]); integrability class is
// preserved, which the integrator tests check.
Integrand scale_by_bounded(const ScalarStepFunction& alpha,
                           const Integrand& g);

// lhs = d_H(G(t), G(t2)) computed exactly on segments, rhs = ||g(t)-g(t2)||.
// The inequality lhs <= rhs is the basic continuity-transfer estimate.
std::pair<double, double> hausdorff_endpoint_gap(const Integrand& g, double t,
                                       double t2);

// Random step function with a minimum piece width, for the property and
// round-trip harnesses.
StepVectorFunction random_step_function(Rng& rng, int dim, int max_pieces,
                                        double min_gap = 0.02,
                                        double lo = -2.0, double hi = 2.0);

// Random weight on the same or refined breakpoints; binary = values in
// {0,1} (the extreme selections), otherwise uniform in [0,1].
ScalarWeight random_step_weight(Rng& rng, const std::vector<double>& base,
                                bool binary, int extra_cuts = 0);

}  // namespace gaugeint

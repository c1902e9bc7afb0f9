// Riemann-sum machinery and gauge-driven convergence loops for McShane,
// Henstock and Birkhoff integrals of vector functions and determined
// multifunctions, exact step-function oracles (Pettis integral, selection
// range), the variational-defect checker and the bang-bang maximizer.
#pragma once

#include <gaugeint/convex.hpp>
#include <gaugeint/functions.hpp>
#include <gaugeint/partitions.hpp>

#include <limits>

namespace gaugeint {

enum class IntegralKind { McShane, Henstock, Birkhoff };

std::string to_string(IntegralKind k);

// A deterministic sequence of gauges indexed from k = 1.  The paper only
// asserts existence of gauges; these constructions are the artifact's
// documented defaults.
struct GaugeSchedule {
  std::string name;
  int max_iterations = 40;
  std::function<Gauge(int)> gauge_at;

  // Constant(2^-k): the generic free-tag default.
  static GaugeSchedule constant_halving(int iterations = 40,
                                        double scale = 1.0);
  // Step gauges on dyadic pieces with value 2^-k: the measurable-gauge
  // (Birkhoff) flavor of the constant schedule.
  static GaugeSchedule dyadic_step(int iterations = 40);
  // Step gauge that is coarse away from the integrand's breakpoints and
  // collapses geometrically toward them (delta <= dist/2 inside collars,
  // delta = eps_k right at a breakpoint).  Cells can then never straddle a
  // breakpoint by more than eps_k, so the Riemann sum error is bounded by
  // sum of jump norms times eps_k with a few hundred intervals instead of
  // O(1/eps) of them.  When eps1 > 0 the first level already starts at
  // eps1, so the structural bound holds from the earliest possible
  // convergence trigger onward (bisection inside a piece leaves step sums
  // unchanged, so successive differences alone can stall at zero).
  static GaugeSchedule step_adapted(std::vector<double> breakpoints,
                                    int iterations = 40, double eps1 = 0.0);
  // Step gauge with geometric pieces (2^-j-1, 2^-j] valued c_k * inf^3:
  // resolves the 1/t^2 oscillation of the pathological derivative while the
  // piece [0, 2^-J] keeps the origin cell tagged at t = 0.
  static GaugeSchedule singular_geometric(double tol, int iterations = 40);
};

struct IterationRecord {
  std::string gauge;
  std::size_t n_intervals = 0;
  double succ_diff = std::numeric_limits<double>::quiet_NaN();
  double err_bound = 0.0;  // set mode: grid error bound of the comparison
  double sum_norm = 0.0;   // ||S_k|| resp. max support value (diagnostic)
};

struct IntegralResult {
  enum class Mode { Vector, Set };

  Mode mode = Mode::Vector;
  IntegralKind kind = IntegralKind::McShane;
  bool converged = false;
  Vector value;                          // vector mode
  std::optional<SupportVector> support;  // set mode
  std::optional<Zonotope> zonotope;      // set mode, if generators fit the cap
  double error_estimate = std::numeric_limits<double>::infinity();
  std::vector<IterationRecord> iterations;
};

struct IntegrateOptions {
  double tol = 1e-6;
  // When absent a default is chosen: singular vector-mode Henstock runs get
  // singular_geometric, exact step integrands get step_adapted, Birkhoff
  // gets dyadic_step, everything else constant_halving.
  std::optional<GaugeSchedule> schedule;
  // Set mode comparison grid; defaults to the dimension's standard grid.
  GridPtr grid;
  // Optional adversarial tag policy: each cell's tag is moved to the argmax
  // of this score over `score_samples` equispaced points of the cell.
  std::function<double(double)> tag_score;
  int score_samples = 17;
  int max_depth = 60;
  // Stop (NonConvergent) once an iteration needs more cells than this.
  std::size_t max_cells = 30'000'000;
  // Keep the explicit generator list only while it stays below this size.
  std::size_t zonotope_generator_cap = 400'000;
};

// -- plain Riemann sums -------------------------------------------------

// sum_i g(tag_i) |I_i| in fixed left-to-right order.
Vector riemann_sum_vec(const Integrand& g, const TaggedPartition& p);

// Zonotope with generators g(tag_i) |I_i|; by the embedding identity this
// is the exact Minkowski sum of the scaled segments G(tag_i)|I_i|.
Zonotope riemann_sum_set(const DeterminedMF& G, const TaggedPartition& p);

// -- convergence loops --------------------------------------------------

IntegralResult mcshane_integrate(const Integrand& g,
                                 const IntegrateOptions& opt = {});
IntegralResult mcshane_integrate(const DeterminedMF& G,
                                 const IntegrateOptions& opt = {});
IntegralResult henstock_integrate(const Integrand& g,
                                  const IntegrateOptions& opt = {});
IntegralResult henstock_integrate(const DeterminedMF& G,
                                  const IntegrateOptions& opt = {});
IntegralResult birkhoff_integrate(const Integrand& g,
                                  const IntegrateOptions& opt = {});
IntegralResult birkhoff_integrate(const DeterminedMF& G,
                                  const IntegrateOptions& opt = {});

// -- exact oracles at step scale -----------------------------------------

// Exact Pettis integral of a step function over E: sum_k x_k lambda(E n A_k).
Vector pettis_step(const StepVectorFunction& g, const MeasurableSet& E);
// Set version: zonotope with generators x_k lambda(E n A_k).
Zonotope pettis_step_set(const StepVectorFunction& g, const MeasurableSet& E);

// The set { integral of phi*g : phi measurable, 0 <= phi <= 1 } equals
// the zonotope with generators x_k lambda(A_k), because the integral of phi
// over A_k sweeps [0, lambda(A_k)] independently per piece.
Zonotope selection_range(const StepVectorFunction& g);

// integral of ||g|| = sum_k ||x_k|| lambda(A_k); the Bochner criterion for
// both g and its determined multifunction.
double bochner_norm_integral(const StepVectorFunction& g);

// -- bang-bang maximization ----------------------------------------------

struct BangBangResult {
  double max_norm = 0.0;
  std::vector<std::uint8_t> signs;
};

// max over a in {0,1}^n of ||sum a_i v_i|| by enumeration (n <= 20); by
// convexity this equals the max over the full box [0,1]^n.  Ties break
// toward the smaller bit pattern.
BangBangResult bang_bang_max(const std::vector<Vector>& vectors);

// -- variational Henstock primitive and defect ----------------------------

// Additive interval map I -> Phi(I) in ck(X), represented as zonotopes.
class IntervalPrimitive {
 public:
  // Exact primitive of a step function: Phi([a,b]) = (P)int_a^b G.
  static IntervalPrimitive exact(StepVectorFunction g);
  // Table-backed primitive defined only on unions of the given cells;
  // queries that do not align with cell boundaries throw.
  static IntervalPrimitive from_table(std::vector<double> cuts,
                                      std::vector<Zonotope> cell_values);

  // Wrapper scaling every queried subinterval of [lo,hi] by `factor`
  // (a deliberately corrupted primitive, for defect detection tests).
  IntervalPrimitive corrupted(double lo, double hi, double factor) const;

  Zonotope operator()(double lo, double hi) const { return fn_(lo, hi); }

 private:
  std::function<Zonotope(double, double)> fn_;
};

struct DefectResult {
  double defect = 0.0;      // sum of grid Hausdorff distances
  double grid_error = 0.0;  // summed grid error bounds, reported separately
};

// sum_j d_H(Phi(I_j), G(tag_j)|I_j|) over the partition items.
DefectResult variational_defect(const DeterminedMF& G,
                                const IntervalPrimitive& prim,
                                const TaggedPartition& p, const GridPtr& grid);

// Partition refined at the given breakpoints: every block is split into
// equal cells of length <= mesh, so no cell straddles a breakpoint.
TaggedPartition refined_partition(const std::vector<double>& breakpoints,
                                  double mesh, TagRule rule = TagRule::Mid);

// Default comparison grid for a dimension (2 directions for d=1, 720 for
// d=2, 2000 for d>=3).
GridPtr default_grid(int dim);

}  // namespace gaugeint

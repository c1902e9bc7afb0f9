// Executable reproductions of the worked examples: the e_t/t lower bound,
// the conv{0,e_t} upper bound, the Henstock-but-not-McShane witness, and
// the McShane/Birkhoff round trip against the selection-range oracle.
#pragma once

#include <gaugeint/integrators.hpp>

namespace gaugeint {

struct DemoTrialRow {
  int trial = 0;
  double observed = 0.0;
  bool pass = false;
  std::string note;
};

struct DemoReport {
  std::string demo_id;
  std::string claim;
  std::vector<std::pair<std::string, double>> observed;
  double threshold = 0.0;
  bool pass = false;
  std::string provenance;
  std::vector<DemoTrialRow> trials;
  int inconclusive = 0;
};

// Fresh-basis model: any single Riemann sum touches finitely many tags, and
// the sum norm only depends on pairwise orthogonality, so each distinct tag
// is given its own orthonormal coordinate.

// g(t) = e_t / t: every delta-fine Perron partition whose first tag is
// positive satisfies ||sum e_{t_i}/t_i |I_i| || >= 1, because the interval
// containing 0 forces t_1 <= |I_1|.  Trial 0 uses `gauge`; later trials use
// random step gauges.  When the partitioner tags the origin cell at 0 the
// cell is re-tagged at its right endpoint if still fine, otherwise the
// gauge is shrunk and the trial retried; unresolvable trials count as
// inconclusive.
DemoReport demo_e_over_t(int trials, const Gauge& gauge, std::uint64_t seed);

// H(t) = conv{0, e_t}: for a partition with mesh < 1/n and distinct tags,
// the Riemann sum norm computed by the grouped formula
// (sum_k sum_i |I_i n J_k|^2)^(1/2) is at most 1/sqrt(n).  The direct
// fresh-basis norm (sum_i |I_i|^2)^(1/2) is reported alongside; the two
// agree exactly when no interval straddles a J_k boundary.
DemoReport demo_orthonormal_H(int n, const TaggedPartition& partition);

// The pathological derivative: (a) vector Henstock integration converges to
// sin(1) within tol; (b) adversarial positive-part sums at mesh 2^-k cross
// 10 within 22 levels, and the set-mode McShane loop with the same
// adversarial tags is NonConvergent, witnessing that the determined
// multifunction is not gauge integrable.
DemoReport demo_derivative_henstock(double tol);

// Random step functions: McShane and Birkhoff set loops converge and land
// on the selection-range zonotope within 1e-6 plus the reported grid
// error.  Includes the deterministic scalar +-1 case with range [-1/2, 1/2].
DemoReport demo_transfer_roundtrip(std::uint64_t seed, int cases);

// Shared round-trip harness (also used by the acceptance suite).
struct RoundTripCase {
  int dim = 0;
  std::size_t pieces = 0;
  double mcshane_distance = 0.0;
  double mcshane_bound = 0.0;
  double birkhoff_distance = 0.0;
  double birkhoff_bound = 0.0;
  bool converged = false;
  bool pass = false;
};

RoundTripCase run_roundtrip_case(const StepVectorFunction& g, double tol);

// Random step gauge for the e_t/t harness.
Gauge random_step_gauge(Rng& rng);

}  // namespace gaugeint

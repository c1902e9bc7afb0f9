#include <gaugeint/integrators.hpp>

#include <cmath>
#include <set>

namespace gaugeint {

std::string to_string(IntegralKind k) {
  switch (k) {
    case IntegralKind::McShane:
      return "mcshane";
    case IntegralKind::Henstock:
      return "henstock";
    case IntegralKind::Birkhoff:
      return "birkhoff";
  }
  return {};
}

GridPtr default_grid(int dim) {
  if (dim == 1) return make_direction_grid(1);
  if (dim == 2) return make_direction_grid(2, 720);
  return make_direction_grid(dim, 2000);
}

// ---------------------------------------------------------------- schedules

GaugeSchedule GaugeSchedule::constant_halving(int iterations, double scale) {
  GaugeSchedule s;
  s.name = "constant-halving";
  s.max_iterations = iterations;
  s.gauge_at = [scale](int k) {
    return Gauge::constant(scale * std::ldexp(1.0, -k));
  };
  return s;
}

GaugeSchedule GaugeSchedule::dyadic_step(int iterations) {
  GaugeSchedule s;
  s.name = "dyadic-step";
  s.max_iterations = iterations;
  s.gauge_at = [](int k) {
    const int pieces = 1 << std::min(k, 8);
    std::vector<double> breaks;
    breaks.reserve(pieces - 1);
    for (int j = 1; j < pieces; ++j)
      breaks.push_back(static_cast<double>(j) / pieces);
    std::vector<double> vals(static_cast<std::size_t>(pieces),
                             std::ldexp(1.0, -k));
    return Gauge::step(std::move(breaks), std::move(vals));
  };
  return s;
}

GaugeSchedule GaugeSchedule::step_adapted(std::vector<double> breakpoints,
                                          int iterations, double eps1) {
  double min_gap = 1.0;
  double prev = 0.0;
  for (double b : breakpoints) {
    min_gap = std::min(min_gap, b - prev);
    prev = b;
  }
  min_gap = std::min(min_gap, 1.0 - prev);
  const double gamma = std::min(0.125, min_gap / 4.0);
  const double start = eps1 > 0.0 ? std::min(eps1, gamma / 4.0) : gamma / 2.0;

  GaugeSchedule s;
  s.name = "step-adapted";
  s.max_iterations = iterations;
  s.gauge_at = [breaks = std::move(breakpoints), gamma, start](int k) {
    if (breaks.empty()) return Gauge::step({}, {0.75});
    const double eps = start * std::ldexp(1.0, 1 - k);

    // delta(t) = eps within eps of a breakpoint, then doubles with the
    // distance (delta <= dist/2) until it reaches the coarse level gamma.
    // A cell can therefore contain a breakpoint only if it is shorter
    // than 2*eps.
    auto collar_value = [eps, gamma](double dist) {
      if (dist < 2.0 * eps) return eps;
      const double v = std::ldexp(eps, static_cast<int>(std::floor(
                                            std::log2(dist / eps))) -
                                           1);
      return std::min(gamma, v);
    };

    std::set<double> cut_set;
    for (double b : breaks) {
      for (int j = 1;; ++j) {
        const double r = std::ldexp(eps, j);
        if (r >= 4.0 * gamma) break;
        if (b - r > 0.0) cut_set.insert(b - r);
        if (b + r < 1.0) cut_set.insert(b + r);
      }
      cut_set.insert(b);
    }
    std::vector<double> cuts(cut_set.begin(), cut_set.end());
    std::vector<double> vals;
    vals.reserve(cuts.size() + 1);
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
      const double lo = i == 0 ? 0.0 : cuts[i - 1];
      const double hi = i == cuts.size() ? 1.0 : cuts[i];
      double dist = 1.0;
      for (double b : breaks) {
        if (b <= lo)
          dist = std::min(dist, lo - b);
        else if (b >= hi)
          dist = std::min(dist, b - hi);
        else
          dist = 0.0;
      }
      vals.push_back(collar_value(dist));
    }
    return Gauge::step(std::move(cuts), std::move(vals));
  };
  return s;
}

GaugeSchedule GaugeSchedule::singular_geometric(double tol, int iterations) {
  if (!(tol > 0.0))
    throw std::invalid_argument("singular_geometric: tol must be > 0");
  // Geometric pieces (b_m, b_{m+1}] with b_m = (2/3) 2^(-J+m), valued
  // c * b_m^3: cells resolve the 1/t^2 oscillation wherever t > b_0.  The
  // origin piece [0, b_0] carries the value 2*b_0, so the bisection absorbs
  // [0, B] (b_0 <= B < 2 b_0, B dyadic) as a single cell tagged at 0, whose
  // term vanishes and whose primitive gap is at most (2 b_0)^2 <= tol/8.
  // The breakpoints are non-dyadic on purpose: candidate tags produced by
  // dyadic bisection can never sit on a breakpoint, where the left-piece
  // rule would hand them the previous piece's larger window.
  const int J = std::clamp(
      static_cast<int>(std::ceil(0.5 * std::log2(14.3 / tol))), 4, 14);

  GaugeSchedule s;
  s.name = "singular-geometric";
  s.max_iterations = iterations;
  s.gauge_at = [J](int k) {
    const double c = 0.05 * std::ldexp(1.0, -k);
    std::vector<double> breaks;
    std::vector<double> vals;
    breaks.reserve(static_cast<std::size_t>(J) + 1);
    vals.reserve(static_cast<std::size_t>(J) + 2);
    for (int m = 0; m <= J; ++m)
      breaks.push_back((2.0 / 3.0) * std::ldexp(1.0, -J + m));
    vals.push_back(2.0 * breaks.front());  // [0, b_0], admits tag 0
    for (int m = 0; m <= J; ++m) {
      const double inf = breaks[static_cast<std::size_t>(m)];
      vals.push_back(c * inf * inf * inf);
    }
    return Gauge::step(std::move(breaks), std::move(vals));
  };
  return s;
}

// ------------------------------------------------------------ Riemann sums

Vector riemann_sum_vec(const Integrand& g, const TaggedPartition& p) {
  validate(p);
  Vector sum = Vector::Zero(g.dim());
  for (const auto& it : p.items) sum += g(it.tag) * it.length();
  return sum;
}

Zonotope riemann_sum_set(const DeterminedMF& G, const TaggedPartition& p) {
  validate(p);
  Zonotope z(G.dim());
  z.generators.reserve(p.items.size());
  for (const auto& it : p.items) z.generators.push_back(G.g(it.tag) * it.length());
  return z;
}

// ----------------------------------------------------------- the main loop

namespace {

GaugeSchedule default_schedule(IntegralKind kind, const Integrand& f,
                               bool set_mode, double tol) {
  if (f.singular() && kind == IntegralKind::Henstock && !set_mode)
    return GaugeSchedule::singular_geometric(tol);
  if (const StepVectorFunction* st = f.step()) {
    // Start the collar width at the tolerance scale: error <= jumps * eps
    // holds structurally, so a Cauchy stall cannot certify a wrong value.
    double jumps = 1.0;
    for (std::size_t k = 0; k + 1 < st->values.size(); ++k)
      jumps += (st->values[k + 1] - st->values[k]).norm();
    return GaugeSchedule::step_adapted(st->breakpoints, 40,
                                       tol / (8.0 * jumps));
  }
  if (kind == IntegralKind::Birkhoff) return GaugeSchedule::dyadic_step();
  return GaugeSchedule::constant_halving();
}

double argmax_tag(const std::function<double(double)>& score, double a,
                  double b, int samples) {
  double best_t = a;
  double best_s = score(a);
  for (int j = 1; j < samples; ++j) {
    const double t = a + (b - a) * static_cast<double>(j) /
                             static_cast<double>(samples - 1);
    const double s = score(t);
    if (s > best_s) {
      best_s = s;
      best_t = t;
    }
  }
  return best_t;
}

IntegralResult run_loop(IntegralKind kind, const Integrand& f, bool set_mode,
                        const IntegrateOptions& opt) {
  IntegralResult res;
  res.kind = kind;
  res.mode = set_mode ? IntegralResult::Mode::Set : IntegralResult::Mode::Vector;

  const GaugeSchedule schedule =
      opt.schedule ? *opt.schedule : default_schedule(kind, f, set_mode, opt.tol);
  const bool perron = kind == IntegralKind::Henstock;
  const GridPtr grid =
      set_mode ? (opt.grid ? opt.grid : default_grid(f.dim())) : nullptr;
  const StepVectorFunction* st = f.step();
  const double half_gap_chord =
      set_mode ? 2.0 * std::sin(grid->angular_gap / 2.0) : 0.0;

  Vector cur_vec;
  Vector cur_vals;
  double cur_radius = 0.0;
  std::vector<Vector> cur_gens;
  bool cur_gens_ok = false;
  double diff_prev = std::numeric_limits<double>::quiet_NaN();
  double diff_cur = std::numeric_limits<double>::quiet_NaN();

  for (int k = 1; k <= schedule.max_iterations; ++k) {
    const Gauge gauge = schedule.gauge_at(k);

    std::size_t count = 0;
    Vector vsum;
    Vector svals;
    double sradius = 0.0;
    std::vector<double> piece_len;
    std::vector<Vector> gens;
    bool gens_ok = set_mode;
    if (set_mode)
      svals = Vector::Zero(grid->size());
    else
      vsum = Vector::Zero(f.dim());
    if (set_mode && st) piece_len.assign(st->pieces(), 0.0);

    cousin_scan(gauge, perron, opt.max_depth,
                [&](double a, double b, double tag) {
                  if (opt.tag_score)
                    tag = argmax_tag(opt.tag_score, a, b, opt.score_samples);
                  const double len = b - a;
                  ++count;
                  if (!set_mode) {
                    vsum += f(tag) * len;
                    return;
                  }
                  if (st) {
                    piece_len[st->piece(tag)] += len;
                    return;
                  }
                  Vector v = f(tag) * len;
                  svals += (v.transpose() * grid->directions)
                               .transpose()
                               .cwiseMax(0.0)
                               .eval();
                  sradius += v.norm();
                  if (gens_ok) {
                    if (gens.size() < opt.zonotope_generator_cap)
                      gens.push_back(std::move(v));
                    else
                      gens_ok = false;
                  }
                });

    if (set_mode && st) {
      // Group the tagged lengths by piece: same set value as the per-item
      // zonotope, with one generator per piece.
      for (std::size_t j = 0; j < piece_len.size(); ++j) {
        if (piece_len[j] == 0.0) continue;
        Vector v = st->values[j] * piece_len[j];
        svals += (v.transpose() * grid->directions)
                     .transpose()
                     .cwiseMax(0.0)
                     .eval();
        sradius += v.norm();
        gens.push_back(std::move(v));
      }
    }

    IterationRecord rec;
    rec.gauge = gauge.describe();
    rec.n_intervals = count;
    if (set_mode) {
      rec.sum_norm = svals.size() ? svals.maxCoeff() : 0.0;
      if (k > 1) {
        rec.succ_diff = (svals - cur_vals).cwiseAbs().maxCoeff();
        rec.err_bound = (sradius + cur_radius) * half_gap_chord;
      } else {
        rec.err_bound = sradius * half_gap_chord;
      }
    } else {
      rec.sum_norm = vsum.norm();
      if (k > 1) rec.succ_diff = (vsum - cur_vec).norm();
    }

    cur_vec = std::move(vsum);
    cur_vals = std::move(svals);
    cur_radius = sradius;
    cur_gens = std::move(gens);
    cur_gens_ok = gens_ok;
    diff_prev = diff_cur;
    diff_cur = rec.succ_diff;
    res.iterations.push_back(std::move(rec));

    if (k >= 3 && diff_prev < opt.tol / 2.0 && diff_cur < opt.tol / 2.0) {
      res.converged = true;
      break;
    }
    if (count > opt.max_cells) break;  // the next refinement would double it
  }

  if (set_mode) {
    SupportVector sv;
    sv.grid = grid;
    sv.values = std::move(cur_vals);
    sv.radius_bound = cur_radius;
    res.support = std::move(sv);
    if (cur_gens_ok) res.zonotope = Zonotope(f.dim(), std::move(cur_gens));
    if (!res.iterations.empty() &&
        std::isfinite(res.iterations.back().succ_diff))
      res.error_estimate =
          res.iterations.back().succ_diff + res.iterations.back().err_bound;
  } else {
    res.value = std::move(cur_vec);
    if (!res.iterations.empty() &&
        std::isfinite(res.iterations.back().succ_diff))
      res.error_estimate = res.iterations.back().succ_diff;
  }
  return res;
}

}  // namespace

IntegralResult mcshane_integrate(const Integrand& g,
                                 const IntegrateOptions& opt) {
  return run_loop(IntegralKind::McShane, g, false, opt);
}

IntegralResult mcshane_integrate(const DeterminedMF& G,
                                 const IntegrateOptions& opt) {
  return run_loop(IntegralKind::McShane, G.g, true, opt);
}

IntegralResult henstock_integrate(const Integrand& g,
                                  const IntegrateOptions& opt) {
  return run_loop(IntegralKind::Henstock, g, false, opt);
}

IntegralResult henstock_integrate(const DeterminedMF& G,
                                  const IntegrateOptions& opt) {
  return run_loop(IntegralKind::Henstock, G.g, true, opt);
}

IntegralResult birkhoff_integrate(const Integrand& g,
                                  const IntegrateOptions& opt) {
  return run_loop(IntegralKind::Birkhoff, g, false, opt);
}

IntegralResult birkhoff_integrate(const DeterminedMF& G,
                                  const IntegrateOptions& opt) {
  return run_loop(IntegralKind::Birkhoff, G.g, true, opt);
}

// ------------------------------------------------------------ step oracles

Vector pettis_step(const StepVectorFunction& g, const MeasurableSet& E) {
  Vector sum = Vector::Zero(g.dim());
  for (std::size_t k = 0; k < g.pieces(); ++k)
    sum += g.values[k] * E.measure_within(g.piece_lo(k), g.piece_hi(k));
  return sum;
}

Zonotope pettis_step_set(const StepVectorFunction& g, const MeasurableSet& E) {
  Zonotope z(g.dim());
  for (std::size_t k = 0; k < g.pieces(); ++k) {
    const double m = E.measure_within(g.piece_lo(k), g.piece_hi(k));
    if (m > 0.0) z.generators.push_back(g.values[k] * m);
  }
  return z;
}

Zonotope selection_range(const StepVectorFunction& g) {
  return pettis_step_set(g, MeasurableSet::full());
}

double bochner_norm_integral(const StepVectorFunction& g) {
  double total = 0.0;
  for (std::size_t k = 0; k < g.pieces(); ++k)
    total += g.values[k].norm() * g.piece_measure(k);
  return total;
}

// -------------------------------------------------------------- bang-bang

BangBangResult bang_bang_max(const std::vector<Vector>& vectors) {
  const std::size_t n = vectors.size();
  if (n > 20)
    throw std::invalid_argument("bang_bang_max: more than 20 vectors");
  BangBangResult out;
  out.signs.assign(n, 0);
  if (n == 0) return out;
  const int dim = static_cast<int>(vectors.front().size());
  for (const auto& v : vectors)
    if (v.size() != dim)
      throw std::invalid_argument("bang_bang_max: dimension mismatch");
  Vector sum(dim);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    sum.setZero();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) sum += vectors[i];
    const double norm = sum.norm();
    if (norm > out.max_norm) {
      out.max_norm = norm;
      for (std::size_t i = 0; i < n; ++i)
        out.signs[i] = static_cast<std::uint8_t>((mask >> i) & 1ULL);
    }
  }
  return out;
}

// ------------------------------------------------- variational primitive

IntervalPrimitive IntervalPrimitive::exact(StepVectorFunction g) {
  IntervalPrimitive p;
  p.fn_ = [g = std::move(g)](double lo, double hi) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
      throw std::invalid_argument("IntervalPrimitive: bad interval");
    Zonotope z(g.dim());
    for (std::size_t k = 0; k < g.pieces(); ++k) {
      const double ov = std::min(hi, g.piece_hi(k)) - std::max(lo, g.piece_lo(k));
      if (ov > 0.0) z.generators.push_back(g.values[k] * ov);
    }
    return z;
  };
  return p;
}

IntervalPrimitive IntervalPrimitive::from_table(
    std::vector<double> cuts, std::vector<Zonotope> cell_values) {
  if (cuts.size() < 2 || cuts.front() != 0.0 || cuts.back() != 1.0)
    throw std::invalid_argument("IntervalPrimitive: cuts must run 0..1");
  if (cell_values.size() + 1 != cuts.size())
    throw std::invalid_argument("IntervalPrimitive: one value per cell");
  IntervalPrimitive p;
  p.fn_ = [cuts = std::move(cuts), cells = std::move(cell_values)](
              double lo, double hi) {
    constexpr double kTol = 1e-12;
    auto locate = [&](double x) -> std::size_t {
      for (std::size_t i = 0; i < cuts.size(); ++i)
        if (std::abs(cuts[i] - x) <= kTol) return i;
      throw std::invalid_argument(
          "IntervalPrimitive: no value defined at endpoint " +
          std::to_string(x));
    };
    const std::size_t i = locate(lo), j = locate(hi);
    if (j < i) throw std::invalid_argument("IntervalPrimitive: hi < lo");
    Zonotope z(cells.empty() ? 1 : cells.front().dim());
    for (std::size_t k = i; k < j; ++k)
      z.generators.insert(z.generators.end(), cells[k].generators.begin(),
                          cells[k].generators.end());
    return z;
  };
  return p;
}

IntervalPrimitive IntervalPrimitive::corrupted(double lo, double hi,
                                               double factor) const {
  IntervalPrimitive p;
  p.fn_ = [base = fn_, lo, hi, factor](double a, double b) {
    Zonotope z = base(a, b);
    if (a >= lo - 1e-15 && b <= hi + 1e-15)
      for (auto& g : z.generators) g *= factor;
    return z;
  };
  return p;
}

DefectResult variational_defect(const DeterminedMF& G,
                                const IntervalPrimitive& prim,
                                const TaggedPartition& p, const GridPtr& grid) {
  validate(p);
  DefectResult out;
  for (const auto& it : p.items) {
    const SupportVector a = embed(prim(it.a, it.b), grid);
    const SupportVector b =
        embed(Segment(G.g(it.tag) * it.length()), grid);
    const HausdorffInterval h = hausdorff_grid(a, b);
    out.defect += h.distance;
    out.grid_error += h.error_bound;
  }
  return out;
}

TaggedPartition refined_partition(const std::vector<double>& breakpoints,
                                  double mesh, TagRule rule) {
  if (!(mesh > 0.0))
    throw std::invalid_argument("refined_partition: mesh must be > 0");
  std::vector<double> edges{0.0};
  edges.insert(edges.end(), breakpoints.begin(), breakpoints.end());
  edges.push_back(1.0);
  TaggedPartition p;
  p.perron = true;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double lo = edges[e], hi = edges[e + 1];
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / mesh)));
    for (int i = 0; i < n; ++i) {
      const double a = lo + (hi - lo) * static_cast<double>(i) / n;
      const double b = lo + (hi - lo) * static_cast<double>(i + 1) / n;
      double tag = a;
      if (rule == TagRule::Mid) tag = 0.5 * (a + b);
      if (rule == TagRule::Right) tag = b;
      p.items.push_back({a, b, tag});
    }
  }
  return p;
}

}  // namespace gaugeint

#include <gaugeint/functions.hpp>

#include <cmath>
#include <set>

namespace gaugeint {

namespace {

void check_breakpoints(const std::vector<double>& breaks) {
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (!(breaks[i] > 0.0 && breaks[i] < 1.0))
      throw std::invalid_argument("step function: breakpoints must be in (0,1)");
    if (i > 0 && !(breaks[i] > breaks[i - 1]))
      throw std::invalid_argument("step function: breakpoints must be sorted");
  }
}

void check_unit_interval(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("evaluation point outside [0,1]");
}

}  // namespace

StepVectorFunction::StepVectorFunction(int dim, std::vector<double> breaks,
                                       std::vector<Vector> vals)
    : dimension(dim),
      breakpoints(std::move(breaks)),
      values(std::move(vals)) {
  check_dim(dim);
  check_breakpoints(breakpoints);
  if (values.size() != breakpoints.size() + 1)
    throw std::invalid_argument("step function: need one value per piece");
  for (const auto& v : values)
    if (v.size() != dim)
      throw std::invalid_argument("step function: value dimension mismatch");
}

Vector StepVectorFunction::operator()(double t) const {
  check_unit_interval(t);
  return values[piece(t)];
}

ScalarStepFunction::ScalarStepFunction(std::vector<double> breaks,
                                       std::vector<double> vals)
    : breakpoints(std::move(breaks)), values(std::move(vals)) {
  check_breakpoints(breakpoints);
  if (values.size() != breakpoints.size() + 1)
    throw std::invalid_argument("scalar step: need one value per piece");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("scalar step: non-finite value");
}

double ScalarStepFunction::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double ScalarStepFunction::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

double pathological_derivative_value(double t) {
  check_unit_interval(t);
  if (t == 0.0) return 0.0;
  const double w = 1.0 / (t * t);
  return 2.0 * t * std::sin(w) - (2.0 / t) * std::cos(w);
}

double pathological_primitive(double t) {
  check_unit_interval(t);
  if (t == 0.0) return 0.0;
  return t * t * std::sin(1.0 / (t * t));
}

Integrand Integrand::from_step(StepVectorFunction s) {
  Integrand f;
  f.dim_ = s.dim();
  f.desc_ = "step(" + std::to_string(s.pieces()) + " pieces, d=" +
            std::to_string(s.dim()) + ")";
  f.step_ = std::move(s);  // operator() dispatches on step_ directly
  return f;
}

Integrand Integrand::constant(Vector x) {
  const int dim = static_cast<int>(x.size());
  return from_step(StepVectorFunction(dim, {}, {std::move(x)}));
}

Integrand Integrand::pathological_derivative() {
  Integrand f;
  f.dim_ = 1;
  f.singular_ = true;
  f.desc_ = "pathological_derivative";
  f.eval_ = [](double t) {
    Vector v(1);
    v[0] = pathological_derivative_value(t);
    return v;
  };
  return f;
}

Integrand Integrand::scaled(const ScalarStepFunction& alpha,
                            const Integrand& inner) {
  Integrand f;
  f.dim_ = inner.dim();
  f.singular_ = inner.singular();
  f.desc_ = "scaled(" + inner.describe() + ")";
  if (const StepVectorFunction* s = inner.step()) {
    // Merge breakpoints; the product is again an exact step function.
    std::set<double> cuts(s->breakpoints.begin(), s->breakpoints.end());
    cuts.insert(alpha.breakpoints.begin(), alpha.breakpoints.end());
    std::vector<double> merged(cuts.begin(), cuts.end());
    std::vector<Vector> vals;
    vals.reserve(merged.size() + 1);
    for (std::size_t k = 0; k <= merged.size(); ++k) {
      // the right endpoint belongs to its piece under the left-piece rule
      const double probe = k == merged.size() ? 1.0 : merged[k];
      vals.push_back(alpha(probe) * (*s)(probe));
    }
    f.step_ = StepVectorFunction(s->dim(), std::move(merged), std::move(vals));
  } else {
    f.eval_ = [alpha, g = inner](double t) -> Vector {
      return alpha(t) * g(t);
    };
  }
  return f;
}

Integrand Integrand::sum(const Integrand& a, const Integrand& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("Integrand::sum: dimension mismatch");
  Integrand f;
  f.dim_ = a.dim();
  f.singular_ = a.singular() || b.singular();
  f.desc_ = "sum(" + a.describe() + ", " + b.describe() + ")";
  const StepVectorFunction* sa = a.step();
  const StepVectorFunction* sb = b.step();
  if (sa && sb) {
    std::set<double> cuts(sa->breakpoints.begin(), sa->breakpoints.end());
    cuts.insert(sb->breakpoints.begin(), sb->breakpoints.end());
    std::vector<double> merged(cuts.begin(), cuts.end());
    std::vector<Vector> vals;
    vals.reserve(merged.size() + 1);
    for (std::size_t k = 0; k <= merged.size(); ++k) {
      const double probe = k == merged.size() ? 1.0 : merged[k];
      vals.push_back((*sa)(probe) + (*sb)(probe));
    }
    f.step_ = StepVectorFunction(a.dim(), std::move(merged), std::move(vals));
  } else {
    f.eval_ = [lhs = a, rhs = b](double t) -> Vector { return lhs(t) + rhs(t); };
  }
  return f;
}

Vector Integrand::operator()(double t) const {
  if (step_) return (*step_)(t);
  check_unit_interval(t);
  return eval_(t);
}

Integrand selection(const ScalarWeight& w, const Integrand& g) {
  for (double v : w.values)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("selection: weight values must be in [0,1]");
  return Integrand::scaled(w, g);
}

Integrand scale_by_bounded(const ScalarStepFunction& alpha,
                           const Integrand& g) {
  return Integrand::scaled(alpha, g);
}

std::pair<double, double> hausdorff_endpoint_gap(const Integrand& g, double t,
                                       double t2) {
  const Vector x = g(t);
  const Vector y = g(t2);
  return {hausdorff_segments(x, y), (x - y).norm()};
}

StepVectorFunction random_step_function(Rng& rng, int dim, int max_pieces,
                                        double min_gap, double lo, double hi) {
  const int pieces = 1 + static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(max_pieces)));
  std::vector<double> breaks;
  int attempts = 0;
  while (static_cast<int>(breaks.size()) < pieces - 1 && attempts < 200) {
    ++attempts;
    const double b = rng.uniform(min_gap, 1.0 - min_gap);
    bool ok = true;
    for (double e : breaks)
      if (std::abs(e - b) < min_gap) ok = false;
    if (ok) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<Vector> vals;
  for (std::size_t k = 0; k <= breaks.size(); ++k)
    vals.push_back(rng.vector(dim, lo, hi));
  return StepVectorFunction(dim, std::move(breaks), std::move(vals));
}

ScalarWeight random_step_weight(Rng& rng, const std::vector<double>& base,
                                bool binary, int extra_cuts) {
  std::set<double> cuts(base.begin(), base.end());
  for (int i = 0; i < extra_cuts; ++i) cuts.insert(rng.uniform(0.01, 0.99));
  std::vector<double> breaks(cuts.begin(), cuts.end());
  std::vector<double> vals;
  for (std::size_t k = 0; k <= breaks.size(); ++k)
    vals.push_back(binary ? static_cast<double>(rng.below(2)) : rng.uniform());
  return ScalarWeight(std::move(breaks), std::move(vals));
}

}  // namespace gaugeint

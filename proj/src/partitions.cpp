#include <gaugeint/partitions.hpp>

#include <cmath>
#include <cstdio>

namespace gaugeint {

namespace {

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

Gauge Gauge::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("Gauge::constant: c must be > 0");
  Gauge g;
  g.kind_ = Kind::Constant;
  g.c_ = c;
  return g;
}

Gauge Gauge::step(std::vector<double> breakpoints,
                  std::vector<double> values) {
  if (values.size() != breakpoints.size() + 1)
    throw std::invalid_argument("Gauge::step: need one value per piece");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > 0.0 && breakpoints[i] < 1.0))
      throw std::invalid_argument("Gauge::step: breakpoints must be in (0,1)");
    if (i > 0 && !(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("Gauge::step: breakpoints must be sorted");
  }
  for (double v : values)
    if (!(v > 0.0))
      throw std::invalid_argument("Gauge::step: values must be > 0");
  Gauge g;
  g.kind_ = Kind::Step;
  g.breakpoints_ = std::move(breakpoints);
  g.values_ = std::move(values);
  return g;
}

Gauge Gauge::power_floor(double c, double p, double floor) {
  if (!(c > 0.0) || !(p >= 1.0) || !(floor > 0.0))
    throw std::invalid_argument(
        "Gauge::power_floor: need c > 0, p >= 1, floor > 0");
  Gauge g;
  g.kind_ = Kind::PowerFloor;
  g.c_ = c;
  g.p_ = p;
  g.floor_ = floor;
  return g;
}

double Gauge::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return c_;
    case Kind::Step:
      return values_[piece_index(breakpoints_, t)];
    case Kind::PowerFloor:
      return std::max(floor_, c_ * std::pow(t, p_));
  }
  return c_;
}

std::string Gauge::describe() const {
  switch (kind_) {
    case Kind::Constant:
      return "Constant(" + fmt_num(c_) + ")";
    case Kind::Step:
      return "Step(" + std::to_string(breakpoints_.size() + 1) +
             " pieces; min " +
             fmt_num(*std::min_element(values_.begin(), values_.end())) + ")";
    case Kind::PowerFloor:
      return "PowerFloor(c=" + fmt_num(c_) + "; p=" + fmt_num(p_) +
             "; floor=" + fmt_num(floor_) + ")";
  }
  return {};
}

Gauge Gauge::scaled(double factor) const {
  if (!(factor > 0.0))
    throw std::invalid_argument("Gauge::scaled: factor must be > 0");
  Gauge g = *this;
  switch (kind_) {
    case Kind::Constant:
      g.c_ *= factor;
      break;
    case Kind::Step:
      for (double& v : g.values_) v *= factor;
      break;
    case Kind::PowerFloor:
      g.c_ *= factor;
      g.floor_ *= factor;
      break;
  }
  return g;
}

double TaggedPartition::mesh() const {
  double m = 0.0;
  for (const auto& it : items) m = std::max(m, it.length());
  return m;
}

void validate(const TaggedPartition& p) {
  if (p.items.empty())
    throw std::invalid_argument("partition: empty item list");
  constexpr double kTol = 1e-12;
  double cursor = 0.0;
  for (const auto& it : p.items) {
    if (!(it.a >= -kTol && it.b <= 1.0 + kTol && it.a < it.b))
      throw std::invalid_argument("partition: bad interval bounds");
    if (std::abs(it.a - cursor) > kTol)
      throw std::invalid_argument("partition: intervals must abut");
    if (!(it.tag >= 0.0 && it.tag <= 1.0))
      throw std::invalid_argument("partition: tag outside [0,1]");
    if (p.perron && !(it.tag >= it.a && it.tag <= it.b))
      throw std::invalid_argument("partition: Perron tag outside its interval");
    cursor = it.b;
  }
  if (std::abs(cursor - 1.0) > kTol)
    throw std::invalid_argument("partition: union is not [0,1]");
}

bool is_delta_fine(const TaggedPartition& p, const Gauge& g) {
  for (const auto& it : p.items) {
    if (p.perron && !(it.tag >= it.a && it.tag <= it.b)) return false;
    const double delta = g(it.tag);
    if (!(it.a > it.tag - delta && it.b < it.tag + delta)) return false;
  }
  return true;
}

namespace {

struct CousinContext {
  const Gauge& gauge;
  bool perron;
  int max_depth;
  const std::function<void(double, double, double)>& emit;

  bool window_ok(double a, double b, double tag) const {
    const double delta = gauge(tag);
    return a > tag - delta && b < tag + delta;
  }

  bool try_candidates(double a, double b) const {
    if (window_ok(a, b, a)) {
      emit(a, b, a);
      return true;
    }
    if (window_ok(a, b, b)) {
      emit(a, b, b);
      return true;
    }
    const double mid = 0.5 * (a + b);
    if (window_ok(a, b, mid)) {
      emit(a, b, mid);
      return true;
    }
    if (perron) return false;

    // Free tags may leave [a,b]: try the left endpoint of the gauge piece
    // containing the interval, then the sampled argmax of delta.
    if (gauge.kind() == Gauge::Kind::Step) {
      const auto& breaks = gauge.step_breakpoints();
      const std::size_t ia = piece_index(breaks, a);
      const std::size_t ib = piece_index(breaks, b);
      if (ia == ib) {
        const double left = ia == 0 ? 0.0 : breaks[ia - 1];
        if (window_ok(a, b, left)) {
          emit(a, b, left);
          return true;
        }
      }
    } else if (gauge.kind() == Gauge::Kind::Constant) {
      if (window_ok(a, b, 0.0)) {
        emit(a, b, 0.0);
        return true;
      }
    }
    double best_t = a, best_delta = gauge(a);
    for (int j = 1; j < 17; ++j) {
      const double t = a + (b - a) * static_cast<double>(j) / 16.0;
      const double d = gauge(t);
      if (d > best_delta) {
        best_delta = d;
        best_t = t;
      }
    }
    if (window_ok(a, b, best_t)) {
      emit(a, b, best_t);
      return true;
    }
    return false;
  }

  void process(double a, double b, int depth) const {
    if (try_candidates(a, b)) return;
    if (depth >= max_depth)
      throw DepthExceeded("cousin_partition: depth " +
                          std::to_string(max_depth) + " exceeded on [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
    const double mid = 0.5 * (a + b);
    process(a, mid, depth + 1);
    process(mid, b, depth + 1);
  }
};

}  // namespace

void cousin_scan(const Gauge& g, bool perron, int max_depth,
                 const std::function<void(double, double, double)>& emit) {
  if (max_depth < 1)
    throw std::invalid_argument("cousin_scan: max_depth must be >= 1");
  CousinContext ctx{g, perron, max_depth, emit};
  ctx.process(0.0, 1.0, 0);
}

TaggedPartition cousin_partition(const Gauge& g, bool perron, int max_depth) {
  TaggedPartition p;
  p.perron = perron;
  cousin_scan(g, perron, max_depth, [&p](double a, double b, double tag) {
    p.items.push_back({a, b, tag});
  });
  return p;
}

TaggedPartition uniform_partition(int n, TagRule rule) {
  if (n < 1) throw std::invalid_argument("uniform_partition: n must be >= 1");
  TaggedPartition p;
  p.perron = true;
  p.items.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / n;
    const double b = static_cast<double>(i + 1) / n;
    double tag = a;
    if (rule == TagRule::Mid) tag = 0.5 * (a + b);
    if (rule == TagRule::Right) tag = b;
    p.items.push_back({a, b, tag});
  }
  return p;
}

TaggedPartition adversarial_tags(const TaggedPartition& p,
                                 const std::function<double(double)>& score,
                                 int samples) {
  if (samples < 1)
    throw std::invalid_argument("adversarial_tags: samples must be >= 1");
  TaggedPartition out = p;
  for (auto& it : out.items) {
    double best_t = it.a;
    double best_score = score(it.a);
    for (int j = 1; j < samples; ++j) {
      const double t =
          it.a + (it.b - it.a) * static_cast<double>(j) /
                     static_cast<double>(samples - 1);
      const double s = score(t);
      if (s > best_score) {
        best_score = s;
        best_t = t;
      }
    }
    it.tag = best_t;
  }
  return out;
}

MeasurableSet::MeasurableSet(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end());
  double cursor = -1.0;
  for (auto& [lo, hi] : intervals_) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi))
      throw std::invalid_argument("MeasurableSet: bad interval");
    if (lo < cursor)
      throw std::invalid_argument("MeasurableSet: intervals overlap");
    cursor = hi;
  }
}

double MeasurableSet::measure() const {
  double total = 0.0;
  for (const auto& [lo, hi] : intervals_) total += hi - lo;
  return total;
}

double MeasurableSet::measure_within(double lo, double hi) const {
  double total = 0.0;
  for (const auto& [a, b] : intervals_) {
    const double l = std::max(a, lo);
    const double h = std::min(b, hi);
    if (h > l) total += h - l;
  }
  return total;
}

}  // namespace gaugeint

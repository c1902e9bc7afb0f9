// Gauges, delta-fine tagged partitions of [0,1] (Perron and free-tag), a
// constructive Cousin partitioner, and measurable sets as finite interval
// unions.
#pragma once

#include <gaugeint/common.hpp>

#include <functional>

namespace gaugeint {

// Closed gauge DSL.  Arbitrary positive functions admit no terminating
// constructive Cousin procedure, so only these three shapes exist:
//   Constant(c)                 delta(t) = c
//   Step(breaks, values)        piecewise constant, left piece wins at breaks
//   PowerFloor(c, p, floor)     delta(t) = max(floor, c * t^p)
class Gauge {
 public:
  enum class Kind { Constant, Step, PowerFloor };

  static Gauge constant(double c);
  static Gauge step(std::vector<double> breakpoints, std::vector<double> values);
  static Gauge power_floor(double c, double p, double floor);

  Kind kind() const { return kind_; }
  double operator()(double t) const;
  std::string describe() const;

  // Pointwise scaling, used by the demo harnesses to perturb a gauge.
  Gauge scaled(double factor) const;

  const std::vector<double>& step_breakpoints() const { return breakpoints_; }

 private:
  Gauge() = default;
  Kind kind_ = Kind::Constant;
  double c_ = 0.0, p_ = 1.0, floor_ = 0.0;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

struct TaggedInterval {
  double a = 0.0;
  double b = 1.0;
  double tag = 0.0;

  double length() const { return b - a; }
};

struct TaggedPartition {
  std::vector<TaggedInterval> items;
  bool perron = false;

  std::size_t size() const { return items.size(); }
  double mesh() const;
};

// Structural checks: 0 <= a < b <= 1, abutting intervals covering [0,1],
// tags in [0,1], and tag-in-interval when perron.  Throws on violation.
void validate(const TaggedPartition& p);

// True iff every item satisfies [a,b] strictly inside
// (tag - delta(tag), tag + delta(tag)), and tags lie in their intervals when
// the partition is Perron.
bool is_delta_fine(const TaggedPartition& p, const Gauge& g);

// Constructive Cousin: bisect [0,1] until each interval admits a tag whose
// gauge window strictly contains it.  Candidate tags are tried in the fixed
// order (a, b, midpoint); free-tag mode additionally tries the left endpoint
// of the gauge piece containing [a,b] and the argmax of delta over 17
// equispaced samples.  Deterministic; throws DepthExceeded past max_depth.
TaggedPartition cousin_partition(const Gauge& g, bool perron,
                                 int max_depth = 60);

// Streaming variant: emits (a, b, tag) left to right without materializing
// the partition.  Integration loops use this to keep memory flat.
void cousin_scan(const Gauge& g, bool perron, int max_depth,
                 const std::function<void(double, double, double)>& emit);

enum class TagRule { Left, Mid, Right };

TaggedPartition uniform_partition(int n, TagRule rule);

// Replaces each tag by the argmax of `score` over `samples` equispaced
// points of its interval (ties break toward the smaller point).  Perron
// status is preserved since replacement tags stay inside the interval.
TaggedPartition adversarial_tags(const TaggedPartition& p,
                                 const std::function<double(double)>& score,
                                 int samples);

// Finite union of disjoint subintervals of [0,1].
class MeasurableSet {
 public:
  MeasurableSet() = default;
  explicit MeasurableSet(std::vector<std::pair<double, double>> intervals);

  static MeasurableSet full() { return MeasurableSet({{0.0, 1.0}}); }

  const std::vector<std::pair<double, double>>& intervals() const {
    return intervals_;
  }
  double measure() const;
  // Lebesgue measure of E intersected with [lo, hi].
  double measure_within(double lo, double hi) const;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

}  // namespace gaugeint

#include <gaugeint/functions.hpp>
#include <gaugeint/integrators.hpp>

#include <doctest.h>

#include "oracles.hpp"

using namespace gaugeint;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

StepVectorFunction two_piece() {
  return StepVectorFunction(2, {0.5}, {vec2(1, 0), vec2(0, 2)});
}

}  // namespace

TEST_CASE("step evaluation uses the left piece at breakpoints") {
  const StepVectorFunction g = two_piece();
  CHECK(g(0.25) == vec2(1, 0));
  CHECK(g(0.5) == vec2(1, 0));
  CHECK(g(0.500001) == vec2(0, 2));
  CHECK(g(1.0) == vec2(0, 2));
  CHECK_THROWS_AS(g(1.5), std::domain_error);
  CHECK_THROWS_AS(g(-0.1), std::domain_error);
}

TEST_CASE("pathological derivative values and primitive") {
  CHECK(pathological_derivative_value(0.0) == 0.0);
  const double at_one = 2.0 * std::sin(1.0) - 2.0 * std::cos(1.0);
  CHECK(pathological_derivative_value(1.0) ==
        doctest::Approx(at_one).epsilon(1e-15));
  CHECK(at_one == doctest::Approx(0.602337).epsilon(1e-6));

  // cross-check against a finite difference of the exact primitive
  for (double t : {0.9, 0.7, 0.51, 0.3}) {
    const double fd =
        oracles::finite_difference(pathological_primitive, t, 1e-7);
    CHECK(pathological_derivative_value(t) ==
          doctest::Approx(fd).epsilon(1e-5));
  }
  CHECK(pathological_primitive(1.0) == doctest::Approx(std::sin(1.0)));
  CHECK(pathological_primitive(0.0) == 0.0);
}

TEST_CASE("determined multifunctions wrap segments") {
  const DeterminedMF zero = determined(Integrand::constant(vec2(0, 0)));
  CHECK(set_norm(zero.at(0.3)) == 0.0);

  const DeterminedMF c = determined(Integrand::constant(vec2(2, -1)));
  CHECK(c.at(0.0).endpoint == vec2(2, -1));
  CHECK(c.at(1.0).endpoint == vec2(2, -1));

  // support of G(t) in direction u equals <u, g(t)>^+ along both paths
  Rng rng(5);
  const DeterminedMF G = determined(Integrand::from_step(two_piece()));
  for (int i = 0; i < 1000; ++i) {
    const Vector u = rng.vector(2, -2, 2);
    const double t = rng.uniform();
    const double via_segment = support(u, G.at(t));
    const double direct = std::max(u.dot(G.g(t)), 0.0);
    CHECK(via_segment == direct);
  }
}

TEST_CASE("positivity: determined supports are never negative") {
  Rng rng(6);
  const DeterminedMF G = determined(Integrand::from_step(
      random_step_function(rng, 3, 6)));
  for (int i = 0; i < 500; ++i) {
    const Vector u = rng.vector(3, -2, 2);
    CHECK(support(u, G.at(rng.uniform())) >= 0.0);
  }
}

TEST_CASE("selections are products and stay on the segment") {
  const Integrand g = Integrand::from_step(two_piece());

  const Integrand full = selection(ScalarWeight::constant(1.0), g);
  CHECK(full(0.3) == g(0.3));
  const Integrand none = selection(ScalarWeight::constant(0.0), g);
  CHECK(none(0.3).norm() == 0.0);

  // indicator of [0, 1/2] against a constant (2,0): exact step integral
  const ScalarWeight half({0.5}, {1.0, 0.0});
  const Integrand sel = selection(half, Integrand::constant(vec2(2, 0)));
  REQUIRE(sel.step() != nullptr);
  CHECK(pettis_step(*sel.step(), MeasurableSet::full()) == vec2(1, 0));

  CHECK_THROWS_AS(selection(ScalarWeight::constant(1.5), g),
                  std::invalid_argument);

  // membership is exact: w(t) g(t) lies on Segment(g(t))
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const ScalarWeight w = random_step_weight(rng, {0.5}, rng.below(2) == 0, 2);
    const double t = rng.uniform();
    const Vector point = selection(w, g)(t);
    CHECK(point_segment_distance(point, g(t)) == 0.0);
  }
}

TEST_CASE("bounded scaling preserves exact step arithmetic") {
  const Integrand g = Integrand::constant(Vector::Ones(1));

  const Integrand neg = scale_by_bounded(ScalarStepFunction::constant(-1.0), g);
  REQUIRE(neg.step() != nullptr);
  CHECK(pettis_step(*neg.step(), MeasurableSet::full())[0] == -1.0);

  const ScalarStepFunction flip({0.5}, {1.0, -1.0});
  const Integrand cancel = scale_by_bounded(flip, g);
  CHECK(pettis_step(*cancel.step(), MeasurableSet::full())[0] == 0.0);

  // scaling by a constant scales the integral
  const Integrand scaled =
      scale_by_bounded(ScalarStepFunction::constant(2.5),
                       Integrand::from_step(two_piece()));
  CHECK(pettis_step(*scaled.step(), MeasurableSet::full()) ==
        2.5 * pettis_step(two_piece(), MeasurableSet::full()));
}

TEST_CASE("sums of integrands merge exactly and integrate linearly") {
  Rng rng(9);
  const StepVectorFunction a = random_step_function(rng, 2, 4);
  const StepVectorFunction b = random_step_function(rng, 2, 4);
  const Integrand s =
      Integrand::sum(Integrand::from_step(a), Integrand::from_step(b));
  REQUIRE(s.step() != nullptr);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform();
    CHECK((s(t) - (a(t) + b(t))).norm() == 0.0);
  }
  const Vector lhs = pettis_step(*s.step(), MeasurableSet::full());
  const Vector rhs = pettis_step(a, MeasurableSet::full()) +
                     pettis_step(b, MeasurableSet::full());
  CHECK((lhs - rhs).norm() <= 1e-15);

  // non-step summand keeps an evaluable (non-step) sum
  const Integrand mixed =
      Integrand::sum(Integrand::pathological_derivative(),
                     Integrand::constant(Vector::Ones(1)));
  CHECK(mixed.step() == nullptr);
  CHECK(mixed.singular());
  CHECK(mixed(0.0)[0] == 1.0);
  CHECK_THROWS_AS(
      Integrand::sum(Integrand::constant(Vector::Ones(1)),
                     Integrand::constant(Vector::Ones(2))),
      std::invalid_argument);
}

TEST_CASE("segment Hausdorff vs endpoint gap examples") {
  {
    const Integrand g = Integrand::from_step(two_piece());
    const auto [lhs, rhs] = hausdorff_endpoint_gap(g, 0.3, 0.3);
    CHECK(lhs == 0.0);
    CHECK(rhs == 0.0);
  }
  {
    Vector a(1), b(1);
    a << 2.0;
    b << 1.0;
    const Integrand g =
        Integrand::from_step(StepVectorFunction(1, {0.5}, {a, b}));
    const auto [lhs, rhs] = hausdorff_endpoint_gap(g, 0.3, 0.7);
    CHECK(lhs == 1.0);  // nested collinear segments achieve equality
    CHECK(rhs == 1.0);
  }
  {
    const Integrand g = Integrand::from_step(
        StepVectorFunction(2, {0.5}, {vec2(1, 0), vec2(0, 1)}));
    const auto [lhs, rhs] = hausdorff_endpoint_gap(g, 0.25, 0.75);
    CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("property: Hausdorff-endpoint inequality across dimensions") {
  Rng rng(8);
  for (int d : {1, 2, 3, 8}) {
    const Integrand g =
        Integrand::from_step(random_step_function(rng, d, 8, 0.01, -4, 4));
    for (int i = 0; i < 2500; ++i) {
      const auto [lhs, rhs] = hausdorff_endpoint_gap(g, rng.uniform(), rng.uniform());
      CHECK(lhs <= rhs + 1e-12);
    }
  }
}

TEST_CASE("breakpoint tie rule is shared across piecewise types") {
  const std::vector<double> breaks{0.25, 0.5};
  const Gauge gauge = Gauge::step(breaks, {1.0, 2.0, 3.0});
  const ScalarStepFunction weight(breaks, {10.0, 20.0, 30.0});
  Vector a(1), b(1), c(1);
  a << 100.0;
  b << 200.0;
  c << 300.0;
  const StepVectorFunction step(1, breaks, {a, b, c});
  for (double t : {0.0, 0.25, 0.26, 0.5, 0.51, 1.0}) {
    const std::size_t k = piece_index(breaks, t);
    CHECK(gauge(t) == static_cast<double>(k + 1));
    CHECK(weight(t) == static_cast<double>((k + 1) * 10));
    CHECK(step(t)[0] == static_cast<double>((k + 1) * 100));
  }
}

#include <gaugeint/demos.hpp>
#include <gaugeint/partitions.hpp>

#include <doctest.h>

using namespace gaugeint;

TEST_CASE("gauge DSL evaluation and validation") {
  const Gauge c = Gauge::constant(0.25);
  CHECK(c(0.0) == 0.25);
  CHECK(c(1.0) == 0.25);
  CHECK_THROWS_AS(Gauge::constant(0.0), std::invalid_argument);

  const Gauge s = Gauge::step({0.5}, {0.5, 0.05});
  CHECK(s(0.0) == 0.5);
  CHECK(s(0.5) == 0.5);  // left piece wins at the breakpoint
  CHECK(s(0.500001) == 0.05);
  CHECK_THROWS_AS(Gauge::step({0.5}, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Gauge::step({0.5}, {0.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Gauge::step({0.7, 0.2}, {1, 1, 1}), std::invalid_argument);

  const Gauge p = Gauge::power_floor(0.5, 1.0, 1e-6);
  CHECK(p(0.0) == 1e-6);
  CHECK(p(0.5) == 0.25);
  CHECK(p(1e-7) == 1e-6);

  CHECK(p.scaled(0.5)(0.5) == 0.125);
  CHECK(p.scaled(0.5)(0.0) == 5e-7);
}

TEST_CASE("is_delta_fine follows the strict window rule") {
  TaggedPartition two;
  two.perron = true;
  two.items = {{0.0, 0.5, 0.25}, {0.5, 1.0, 0.75}};
  CHECK(is_delta_fine(two, Gauge::constant(0.6)));
  CHECK_FALSE(is_delta_fine(two, Gauge::constant(0.2)));

  TaggedPartition one;
  one.perron = true;
  one.items = {{0.0, 1.0, 0.0}};
  CHECK_FALSE(is_delta_fine(one, Gauge::power_floor(0.5, 1.0, 1e-6)));

  // Perron tag membership is enforced
  TaggedPartition off;
  off.perron = true;
  off.items = {{0.0, 0.5, 0.75}, {0.5, 1.0, 0.75}};
  CHECK_FALSE(is_delta_fine(off, Gauge::constant(10.0)));
  off.perron = false;
  CHECK(is_delta_fine(off, Gauge::constant(10.0)));
}

TEST_CASE("cousin partitions are delta-fine by construction") {
  SUBCASE("constant gauge") {
    const TaggedPartition p = cousin_partition(Gauge::constant(0.3), true);
    validate(p);
    CHECK(is_delta_fine(p, Gauge::constant(0.3)));
    CHECK(p.mesh() <= 0.5);
  }
  SUBCASE("step gauge shrinks cells strictly inside the small piece") {
    // Cells whose closure lies inside (0.5, 1] only see delta = 0.05; cells
    // touching 0.5 may borrow the left piece's window through the tie rule.
    const Gauge g = Gauge::step({0.5}, {0.5, 0.05});
    const TaggedPartition p = cousin_partition(g, true);
    validate(p);
    CHECK(is_delta_fine(p, g));
    for (const auto& it : p.items)
      if (it.a > 0.5) CHECK(it.length() < 0.1);
    const TaggedPartition free = cousin_partition(g, false);
    CHECK(is_delta_fine(free, g));
  }
  SUBCASE("power-floor pins the origin cell tag below its length") {
    // The midpoint candidate may cover 0 with a small positive tag once the
    // cell drops under twice the floor, so the tag need not be 0 itself;
    // the inequality tag <= |I| is what the e_t/t computation rests on.
    const Gauge g = Gauge::power_floor(0.5, 1.0, 1e-6);
    const TaggedPartition p = cousin_partition(g, true);
    validate(p);
    CHECK(is_delta_fine(p, g));
    CHECK(p.items.front().a == 0.0);
    CHECK(p.items.front().tag <= p.items.front().length());
    CHECK(p.items.front().length() < 4e-6);
  }
}

TEST_CASE("cousin throws DepthExceeded under an impossible budget") {
  CHECK_THROWS_AS(cousin_partition(Gauge::power_floor(0.5, 1.0, 1e-6), true, 10),
                  DepthExceeded);
}

TEST_CASE("uniform partitions") {
  const TaggedPartition one = uniform_partition(1, TagRule::Mid);
  CHECK(one.size() == 1);
  CHECK(one.items[0].tag == 0.5);

  const TaggedPartition four = uniform_partition(4, TagRule::Left);
  REQUIRE(four.size() == 4);
  CHECK(four.items[0].tag == 0.0);
  CHECK(four.items[1].tag == 0.25);
  CHECK(four.items[2].tag == 0.5);
  CHECK(four.items[3].tag == 0.75);

  CHECK(is_delta_fine(uniform_partition(10, TagRule::Mid),
                      Gauge::constant(0.11)));
  CHECK_THROWS_AS(uniform_partition(0, TagRule::Mid), std::invalid_argument);
}

TEST_CASE("adversarial tags take the sampled argmax with low tie-break") {
  const TaggedPartition two = uniform_partition(2, TagRule::Mid);

  const TaggedPartition flat =
      adversarial_tags(two, [](double) { return 1.0; }, 9);
  CHECK(flat.items[0].tag == 0.0);  // ties break toward the smaller point
  CHECK(flat.items[1].tag == 0.5);

  const TaggedPartition ramp =
      adversarial_tags(two, [](double t) { return t; }, 9);
  CHECK(ramp.items[0].tag == 0.5);
  CHECK(ramp.items[1].tag == 1.0);
  CHECK(ramp.perron);
  validate(ramp);
}

TEST_CASE("property: cousin output is fine for 200 random DSL gauges") {
  Rng rng(2024);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Gauge g = Gauge::constant(1.0);
    switch (rng.below(3)) {
      case 0:
        g = Gauge::constant(rng.uniform(0.01, 0.5));
        break;
      case 1:
        g = random_step_gauge(rng);
        break;
      default:
        g = Gauge::power_floor(rng.uniform(0.1, 1.0), 1.0 + rng.uniform(0.0, 2.0),
                               rng.uniform(1e-4, 1e-2));
    }
    const bool perron = rng.below(2) == 0;
    const TaggedPartition p = cousin_partition(g, perron);
    validate(p);
    CHECK(is_delta_fine(p, g));
    ++checked;

    // partition lengths sum to 1
    double total = 0.0;
    for (const auto& it : p.items) total += it.length();
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(checked == 200);
}

TEST_CASE("property: fineness is monotone in the gauge") {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const Gauge g1 = random_step_gauge(rng);
    const Gauge g2 = g1.scaled(1.0 + rng.uniform(0.0, 3.0));  // g1 <= g2
    const TaggedPartition p = cousin_partition(g1, rng.below(2) == 0);
    CHECK(is_delta_fine(p, g1));
    CHECK(is_delta_fine(p, g2));
  }
}

TEST_CASE("perron power-floor tags the origin interval at t <= |I|") {
  // with floor below the first bisection scale the origin cell carries a
  // tag t with t <= |I|, matching the inequality used by the e_t/t example
  for (double floor : {1e-6, 1e-5, 1e-4}) {
    const Gauge g = Gauge::power_floor(0.5, 1.0, floor);
    const TaggedPartition p = cousin_partition(g, true);
    const TaggedInterval& first = p.items.front();
    CHECK(first.a == 0.0);
    CHECK(first.tag <= first.length());
  }
}

TEST_CASE("measurable sets") {
  const MeasurableSet e({{0.1, 0.3}, {0.5, 0.6}});
  CHECK(e.measure() == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(e.measure_within(0.0, 1.0) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(e.measure_within(0.2, 0.55) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(e.measure_within(0.7, 0.9) == 0.0);
  CHECK(MeasurableSet().measure() == 0.0);
  CHECK(MeasurableSet::full().measure() == 1.0);
  CHECK_THROWS_AS(MeasurableSet({{0.2, 0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(MeasurableSet({{0.0, 0.5}, {0.4, 0.6}}),
                  std::invalid_argument);
}

TEST_CASE("partition validation rejects structural defects") {
  TaggedPartition gap;
  gap.items = {{0.0, 0.4, 0.2}, {0.5, 1.0, 0.7}};
  CHECK_THROWS_AS(validate(gap), std::invalid_argument);

  TaggedPartition short_cover;
  short_cover.items = {{0.0, 0.9, 0.2}};
  CHECK_THROWS_AS(validate(short_cover), std::invalid_argument);

  TaggedPartition bad_tag;
  bad_tag.perron = true;
  bad_tag.items = {{0.0, 0.5, 0.8}, {0.5, 1.0, 0.9}};
  CHECK_THROWS_AS(validate(bad_tag), std::invalid_argument);
}

// Copyright 2026 the dutchbook authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dutchbook/hedging.hpp"

#include <doctest.h>

#include <algorithm>

#include "dutchbook/errors.hpp"
#include "support/generators.hpp"

using namespace dutchbook;
namespace dbt = dutchbook::testing;

namespace {

// Three scenarios, unit bond and S = (2, 1, 0) priced 1; the query gamble
// is a call struck at 1: payoff (1, 0, 0).
Market TrinomialMarket() {
  ScenarioSpace space({"up", "mid", "down"});
  return Market(space,
                {UnitGamble(3), Gamble{"S", {Rational(2), Rational(1), Rational(0)}}},
                {Rational(1), Rational(1)});
}

Gamble Call() { return Gamble{"call", {Rational(1), Rational(0), Rational(0)}}; }

void CheckDominates(const Market& m, const LinearCombination& hedge,
                    const Gamble& g, bool from_above) {
  const auto payoffs = CombinationPayoff(m, hedge);
  for (int j = 0; j < m.scenario_count(); ++j) {
    if (from_above) {
      CHECK(payoffs[j] >= g.payoffs[j]);
    } else {
      CHECK(payoffs[j] <= g.payoffs[j]);
    }
  }
}

Rational HedgePrice(const Market& m, const LinearCombination& hedge) {
  Rational price = 0;
  for (const auto& [name, coefficient] : hedge.terms) {
    price += coefficient * m.previsions()[m.IndexOf(name)];
  }
  return price;
}

}  // namespace

TEST_CASE("superhedging the call costs 1/2") {
  Market m = TrinomialMarket();
  HedgeResult result = Superhedge(m, Call());
  CHECK(result.value == Rational(1, 2));
  CheckDominates(m, result.hedge, Call(), true);
  CHECK(HedgePrice(m, result.hedge) == result.value);
}

TEST_CASE("subhedging the call is worth 0") {
  Market m = TrinomialMarket();
  HedgeResult result = Subhedge(m, Call());
  CHECK(result.value == 0);
  CheckDominates(m, result.hedge, Call(), false);
  CHECK(HedgePrice(m, result.hedge) == result.value);
}

TEST_CASE("gambles in the span replicate themselves") {
  Market m = TrinomialMarket();
  Gamble s{"S_query", {Rational(2), Rational(1), Rational(0)}};
  CHECK(Superhedge(m, s).value == 1);
  CHECK(Subhedge(m, s).value == 1);
  CHECK(Superhedge(m, Gamble{"one", {Rational(1), Rational(1), Rational(1)}}).value == 1);
}

TEST_CASE("measure range of the call is [0, 1/2]") {
  Market m = TrinomialMarket();
  MeasureRange range = ComputeMeasureRange(m, Call());
  CHECK(range.lower == 0);
  CHECK(range.upper == Rational(1, 2));

  // Attaining measures price the whole market and hit the extremes.
  for (const PricingMeasure* q : {&range.minimizer, &range.maximizer}) {
    for (int i = 0; i < m.gamble_count(); ++i) {
      CHECK(Expectation(*q, m.gambles()[i]) == m.previsions()[i]);
    }
  }
  CHECK(Expectation(range.minimizer, Call()) == 0);
  CHECK(Expectation(range.maximizer, Call()) == Rational(1, 2));
}

TEST_CASE("price interval bundles primal and dual certificates") {
  Market m = TrinomialMarket();
  PriceInterval interval = ComputePriceInterval(m, Call());
  CHECK(interval.lower == 0);
  CHECK(interval.upper == Rational(1, 2));
  CheckDominates(m, interval.upper_hedge, Call(), true);
  CheckDominates(m, interval.lower_hedge, Call(), false);
  CHECK(HedgePrice(m, interval.upper_hedge) == interval.upper);
  CHECK(HedgePrice(m, interval.lower_hedge) == interval.lower);
  CHECK(Expectation(interval.lower_measure, Call()) == interval.lower);
  CHECK(Expectation(interval.upper_measure, Call()) == interval.upper);
}

TEST_CASE("replicable gambles have a degenerate interval") {
  Market m = TrinomialMarket();
  PriceInterval interval =
      ComputePriceInterval(m, Gamble{"twice", {Rational(4), Rational(2), Rational(0)}});
  CHECK(interval.lower == 2);
  CHECK(interval.upper == 2);
}

TEST_CASE("with only the unit bond every probability is consistent") {
  ScenarioSpace space({"a", "b"});
  Market m(space, {UnitGamble(2)}, {Rational(1)});
  PriceInterval interval =
      ComputePriceInterval(m, Gamble{"g", {Rational(2), Rational(0)}});
  CHECK(interval.lower == 0);
  CHECK(interval.upper == 2);
}

TEST_CASE("extension coherence matches closed-interval membership") {
  Market m = TrinomialMarket();
  CHECK(CheckExtensionCoherence(m, Call(), Rational(1, 4)).coherent);
  CHECK(CheckExtensionCoherence(m, Call(), Rational(1, 2)).coherent);
  CHECK(CheckExtensionCoherence(m, Call(), Rational(0)).coherent);

  CoherenceVerdict outside = CheckExtensionCoherence(m, Call(), Rational(3, 4));
  CHECK_FALSE(outside.coherent);
  REQUIRE(outside.book.has_value());
  // The book verifies against the extended market.
  Market extended = m.WithGamble(Call(), Rational(3, 4));
  CHECK(BookPayoffOnMarket(extended, outside.book->legs) ==
        outside.book->payoff_evidence);
  CHECK(outside.book->epsilon > 0);
}

TEST_CASE("hedging an incoherent market is a contract error with the book") {
  ScenarioSpace space({"a", "b"});
  Market bad(space, {UnitGamble(2), Gamble{"S", {Rational(2), Rational(0)}}},
             {Rational(1), Rational(3)});
  CHECK_THROWS_AS(Superhedge(bad, Gamble{"g", {Rational(1), Rational(0)}}),
                  IncoherentMarketError);
  CHECK_THROWS_AS(ComputeMeasureRange(bad, Gamble{"g", {Rational(1), Rational(0)}}),
                  IncoherentMarketError);
}

TEST_CASE("query gambles must match the scenario count and avoid name clashes") {
  Market m = TrinomialMarket();
  CHECK_THROWS_AS(Superhedge(m, Gamble{"g", {Rational(1)}}), InputError);
  CHECK_THROWS_AS(
      CheckExtensionCoherence(m, Gamble{"S", {Rational(0), Rational(0), Rational(0)}},
                              Rational(0)),
      InputError);
}

TEST_CASE("zero duality gap on random coherent markets") {
  dbt::Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    Market m = dbt::RandomMarket(rng, true);
    Gamble g = dbt::RandomQueryGamble(rng, m.scenario_count(), "query");
    PriceInterval interval = ComputePriceInterval(m, g);
    CHECK(interval.lower <= interval.upper);
    CheckDominates(m, interval.upper_hedge, g, true);
    CheckDominates(m, interval.lower_hedge, g, false);
    CHECK(HedgePrice(m, interval.upper_hedge) == interval.upper);
    CHECK(HedgePrice(m, interval.lower_hedge) == interval.lower);
  }
}

TEST_CASE("extension coherence agrees with interval membership on randoms") {
  dbt::Rng rng(43);
  for (int it = 0; it < 40; ++it) {
    Market m = dbt::RandomMarket(rng, true);
    Gamble g = dbt::RandomQueryGamble(rng, m.scenario_count(), "query");
    PriceInterval interval = ComputePriceInterval(m, g);

    CHECK(CheckExtensionCoherence(m, g, interval.lower).coherent);
    CHECK(CheckExtensionCoherence(m, g, interval.upper).coherent);
    if (interval.lower < interval.upper) {
      const Rational inside = (interval.lower + interval.upper) / 2;
      CHECK(CheckExtensionCoherence(m, g, inside).coherent);
    }
    CoherenceVerdict below =
        CheckExtensionCoherence(m, g, interval.lower - 1);
    CoherenceVerdict above =
        CheckExtensionCoherence(m, g, interval.upper + 1);
    CHECK_FALSE(below.coherent);
    CHECK_FALSE(above.coherent);
  }
}

TEST_CASE("adding a coherently priced gamble never widens an interval") {
  dbt::Rng rng(47);
  for (int it = 0; it < 30; ++it) {
    Market m = dbt::RandomMarket(rng, true);
    Gamble g = dbt::RandomQueryGamble(rng, m.scenario_count(), "query");
    Gamble extra = dbt::RandomQueryGamble(rng, m.scenario_count(), "extra");

    PriceInterval before = ComputePriceInterval(m, g);
    PriceInterval extra_interval = ComputePriceInterval(m, extra);
    const Rational price = (extra_interval.lower + extra_interval.upper) / 2;
    Market extended = m.WithGamble(extra, price);

    PriceInterval after = ComputePriceInterval(extended, g);
    CHECK(after.lower >= before.lower);
    CHECK(after.upper <= before.upper);
  }
}

TEST_CASE("every consistent measure's expectation is sandwiched by the interval") {
  dbt::Rng rng(53);
  for (int it = 0; it < 40; ++it) {
    Market m = dbt::RandomMarket(rng, true);
    Gamble g = dbt::RandomQueryGamble(rng, m.scenario_count(), "query");
    PriceInterval interval = ComputePriceInterval(m, g);
    auto q = FindPricingMeasure(m);
    REQUIRE(q.has_value());
    const Rational expectation = Expectation(*q, g);
    CHECK(interval.lower <= expectation);
    CHECK(expectation <= interval.upper);
  }
}

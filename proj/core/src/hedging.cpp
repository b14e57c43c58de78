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

#include "dutchbook/errors.hpp"
#include "lp_support.hpp"

namespace dutchbook {

namespace {

void CheckQueryGamble(const Market& m, const Gamble& g) {
  if (g.payoffs.size() != static_cast<size_t>(m.scenario_count())) {
    throw InputError("query gamble '" + g.name + "' has " +
                     std::to_string(g.payoffs.size()) + " payoffs for " +
                     std::to_string(m.scenario_count()) + " scenarios");
  }
}

// minimize/maximize Σ α_i·π(f_i) over combinations whose payoff dominates
// (or is dominated by) g pointwise.
HedgeResult SolveHedge(const Market& m, const Gamble& g, Sense sense) {
  RequireCoherent(m, sense == Sense::kMinimize ? "superhedge" : "subhedge");
  CheckQueryGamble(m, g);

  LinearProgram lp(sense, std::vector<Rational>(m.previsions()));
  const Relation relation =
      sense == Sense::kMinimize ? Relation::kGreaterEqual : Relation::kLessEqual;
  for (int j = 0; j < m.scenario_count(); ++j) {
    std::vector<Rational> row(m.gamble_count());
    for (int i = 0; i < m.gamble_count(); ++i) row[i] = m.gambles()[i].payoffs[j];
    lp.AddConstraint(std::move(row), relation, g.payoffs[j]);
  }

  const auto& result = detail::RequireOptimal(detail::SolveChecked(lp), "hedging");
  HedgeResult out;
  out.value = result.value;
  for (int i = 0; i < m.gamble_count(); ++i) {
    if (result.primal[i] == 0) continue;
    out.hedge.terms.emplace_back(m.gambles()[i].name, result.primal[i]);
  }
  return out;
}

Rational ExtremalExpectation(const Market& m, const Gamble& g, Sense sense,
                             PricingMeasure* attaining) {
  const int n = m.scenario_count();
  LinearProgram lp(sense, std::vector<Rational>(g.payoffs));
  lp.AddConstraint(std::vector<Rational>(n, Rational(1)), Relation::kEqual,
                   Rational(1));
  for (int i = 0; i < m.gamble_count(); ++i) {
    lp.AddConstraint(std::vector<Rational>(m.gambles()[i].payoffs),
                     Relation::kEqual, m.previsions()[i]);
  }
  for (int j = 0; j < n; ++j) lp.SetLowerBound(j, Rational(0));

  const auto& result =
      detail::RequireOptimal(detail::SolveChecked(lp), "measure range");
  *attaining = PricingMeasure(result.primal);
  return result.value;
}

}  // namespace

HedgeResult Superhedge(const Market& m, const Gamble& g) {
  return SolveHedge(m, g, Sense::kMinimize);
}

HedgeResult Subhedge(const Market& m, const Gamble& g) {
  return SolveHedge(m, g, Sense::kMaximize);
}

MeasureRange ComputeMeasureRange(const Market& m, const Gamble& g) {
  RequireCoherent(m, "measure range");
  CheckQueryGamble(m, g);

  PricingMeasure minimizer{std::vector<Rational>{Rational(1)}};
  PricingMeasure maximizer = minimizer;
  Rational lower = ExtremalExpectation(m, g, Sense::kMinimize, &minimizer);
  Rational upper = ExtremalExpectation(m, g, Sense::kMaximize, &maximizer);
  return MeasureRange{std::move(lower), std::move(upper), std::move(minimizer),
                      std::move(maximizer)};
}

PriceInterval ComputePriceInterval(const Market& m, const Gamble& g) {
  HedgeResult upper = Superhedge(m, g);
  HedgeResult lower = Subhedge(m, g);
  MeasureRange range = ComputeMeasureRange(m, g);

  // The pricing-hedging duality, checked exactly. The dual side is a
  // separate LP rather than the simplex multipliers of the primal one, so
  // agreement here really is a cross-check.
  if (upper.value != range.upper || lower.value != range.lower) {
    throw EngineDefectError("duality gap between hedging and measure range");
  }
  return PriceInterval{std::move(lower.value),  std::move(upper.value),
                       std::move(lower.hedge),  std::move(upper.hedge),
                       std::move(range.minimizer), std::move(range.maximizer)};
}

CoherenceVerdict CheckExtensionCoherence(const Market& m, const Gamble& g,
                                         const Rational& g0) {
  RequireCoherent(m, "extension coherence");
  CheckQueryGamble(m, g);
  if (m.IndexOf(g.name) >= 0) {
    throw InputError("query gamble name '" + g.name +
                     "' collides with a market gamble");
  }
  return CheckCoherence(m.WithGamble(g, g0));
}

}  // namespace dutchbook

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

#include "dutchbook/arbitrage.hpp"

#include <algorithm>

#include "dutchbook/errors.hpp"
#include "dutchbook/prevision.hpp"
#include "lp_support.hpp"

namespace dutchbook {

namespace {

std::vector<std::vector<Rational>> MarketMargins(const Market& m) {
  const int n = m.scenario_count();
  std::vector<std::vector<Rational>> margins(n);
  for (int j = 0; j < n; ++j) {
    margins[j].reserve(m.gamble_count());
    for (int i = 0; i < m.gamble_count(); ++i) {
      margins[j].push_back(m.previsions()[i] - m.gambles()[i].payoffs[j]);
    }
  }
  return margins;
}

Book BookFromCoefficients(const Market& m,
                          const std::vector<std::vector<Rational>>& margins,
                          const std::vector<Rational>& coefficients,
                          Rational epsilon) {
  Book book;
  for (int i = 0; i < m.gamble_count(); ++i) {
    if (coefficients[i] == 0) continue;
    book.legs.push_back(BookLeg{m.gambles()[i].name, coefficients[i]});
  }
  book.payoff_evidence = detail::MarginPayoffs(margins, coefficients);
  book.epsilon = std::move(epsilon);
  return book;
}

// Strong arbitrage: some strategy has payoff > 0 in every scenario. For
// each scenario, maximize its payoff subject to payoff ≥ 0 everywhere;
// strong arbitrage exists iff every such optimum is positive, and the
// average of the per-scenario optimal strategies is then a certificate.
std::optional<Book> FindStrongArbitrage(
    const Market& m, const std::vector<std::vector<Rational>>& margins) {
  const int n = m.scenario_count();
  std::vector<int> all_rows(n);
  for (int j = 0; j < n; ++j) all_rows[j] = j;

  std::vector<Rational> combined(m.gamble_count(), Rational(0));
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> weights(n, Rational(0));
    weights[j] = 1;
    auto search = detail::MaximizeWeightedPayoff(margins, weights, all_rows);
    if (search.value <= 0) return std::nullopt;
    for (int i = 0; i < m.gamble_count(); ++i) {
      combined[i] += search.coefficients[i] / n;
    }
  }

  std::vector<Rational> payoffs = detail::MarginPayoffs(margins, combined);
  const Rational floor = *std::min_element(payoffs.begin(), payoffs.end());
  if (floor <= 0) {
    throw EngineDefectError("combined strong-arbitrage strategy lost positivity");
  }
  return BookFromCoefficients(m, margins, combined, floor);
}

std::optional<PArbitrageCertificate> FindPArbitrage(
    const Market& m, const std::vector<std::vector<Rational>>& margins,
    const ReferenceMeasure& reference) {
  std::vector<int> support_rows;
  for (int j = 0; j < m.scenario_count(); ++j) {
    if (reference.weights()[j] > 0) support_rows.push_back(j);
  }
  auto search =
      detail::MaximizeWeightedPayoff(margins, reference.weights(), support_rows);
  if (search.value <= 0) return std::nullopt;

  // The certificate guarantees nonnegativity only ℙ-almost surely, so its
  // uniform floor is reported as zero.
  Book book = BookFromCoefficients(m, margins, search.coefficients, Rational(0));
  return PArbitrageCertificate{std::move(book), reference, search.value};
}

}  // namespace

ArbitrageReport Classify(const Market& m,
                         const std::optional<ReferenceMeasure>& reference) {
  if (reference.has_value() && reference->size() != m.scenario_count()) {
    throw InputError("reference measure has " + std::to_string(reference->size()) +
                     " weights for " + std::to_string(m.scenario_count()) +
                     " scenarios");
  }

  const auto margins = MarketMargins(m);
  ArbitrageReport report;
  report.uniformly_strong = FindBook(m);
  report.strong = FindStrongArbitrage(m, margins);
  if (reference.has_value()) {
    report.p_arbitrage = FindPArbitrage(m, margins, *reference);
  } else {
    report.notes.push_back(
        "no reference measure supplied; the ℙ-arbitrage level was not evaluated");
  }

  // On a finite scenario space the pointwise minimum is attained, so
  // strong and uniformly strong arbitrage coincide.
  if (report.uniformly_strong.has_value() != report.strong.has_value()) {
    throw EngineDefectError(
        "strong and uniformly strong arbitrage disagree on a finite space");
  }
  if (reference.has_value() && report.strong.has_value() &&
      !report.p_arbitrage.has_value()) {
    throw EngineDefectError("strong arbitrage without ℙ-arbitrage");
  }
  return report;
}

std::optional<PricingMeasure> FindFullSupportMeasure(const Market& m) {
  const int n = m.scenario_count();
  // Variables: q_0..q_{n-1}, then the floor t.
  std::vector<Rational> objective(n + 1, Rational(0));
  objective[n] = 1;
  LinearProgram lp(Sense::kMaximize, std::move(objective));

  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(n + 1, Rational(0));
    row[j] = 1;
    row[n] = -1;
    lp.AddConstraint(std::move(row), Relation::kGreaterEqual, Rational(0));
  }
  {
    std::vector<Rational> row(n + 1, Rational(1));
    row[n] = 0;
    lp.AddConstraint(std::move(row), Relation::kEqual, Rational(1));
  }
  for (int i = 0; i < m.gamble_count(); ++i) {
    std::vector<Rational> row(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) row[j] = m.gambles()[i].payoffs[j];
    lp.AddConstraint(std::move(row), Relation::kEqual, m.previsions()[i]);
  }
  for (int j = 0; j < n; ++j) lp.SetLowerBound(j, Rational(0));

  LPOutcome outcome = detail::SolveChecked(lp);
  if (std::holds_alternative<InfeasibleOutcome>(outcome)) return std::nullopt;
  const auto& result = detail::RequireOptimal(outcome, "full-support search");
  if (result.value <= 0) return std::nullopt;
  return PricingMeasure(
      std::vector<Rational>(result.primal.begin(), result.primal.end() - 1));
}

Market IndicatorMarket(const EventQuoteSystem& q) {
  const ScenarioSpace& space = q.algebra().space();
  std::vector<Gamble> gambles;
  std::vector<Rational> previsions;
  for (int i = 0; i < q.algebra().size(); ++i) {
    const Event& event = q.algebra().events()[i];
    std::vector<Rational> payoffs(space.size());
    for (int j = 0; j < space.size(); ++j) payoffs[j] = event.Indicator(j);
    gambles.push_back(Gamble{event.Describe(space), std::move(payoffs)});
    previsions.push_back(q.quotes()[i]);
  }
  return Market(space, std::move(gambles), std::move(previsions));
}

}  // namespace dutchbook

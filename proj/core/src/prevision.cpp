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

#include "dutchbook/prevision.hpp"

#include <memory>
#include <mutex>

#include "dutchbook/errors.hpp"
#include "lp_support.hpp"

namespace dutchbook {

namespace {

struct CachedBookSearch {
  std::optional<Book> book;
};

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

std::optional<Book> SolveBookSearch(const Market& m) {
  auto search = detail::MaximizeUniformMargin(MarketMargins(m));
  if (!search.has_value()) return std::nullopt;
  Book book;
  for (int i = 0; i < m.gamble_count(); ++i) {
    if (search->coefficients[i] == 0) continue;
    book.legs.push_back(BookLeg{m.gambles()[i].name, search->coefficients[i]});
  }
  book.epsilon = search->epsilon;
  book.payoff_evidence = std::move(search->payoffs);
  return book;
}

const CachedBookSearch& BookSearchFor(const Market& m) {
  const auto& cell = m.analysis_cell();
  std::lock_guard<std::mutex> lock(cell->mu);
  if (cell->value == nullptr) {
    auto fresh = std::make_shared<CachedBookSearch>();
    fresh->book = SolveBookSearch(m);
    cell->value = std::move(fresh);
  }
  return *static_cast<const CachedBookSearch*>(cell->value.get());
}

int ResolveGamble(const Market& m, const std::string& name) {
  int index = m.IndexOf(name);
  if (index < 0) {
    throw InputError("combination references unknown gamble '" + name + "'");
  }
  return index;
}

// Extremal prices over all representations of `payoffs` in the market
// span: optimize Σ γ_i·π(f_i) subject to Σ γ_i·f_i(ω) = payoffs(ω).
Rational RepresentationPrice(const Market& m, const std::vector<Rational>& payoffs,
                             Sense sense) {
  std::vector<Rational> objective(m.previsions());
  LinearProgram lp(sense, std::move(objective));
  for (int j = 0; j < m.scenario_count(); ++j) {
    std::vector<Rational> row(m.gamble_count());
    for (int i = 0; i < m.gamble_count(); ++i) row[i] = m.gambles()[i].payoffs[j];
    lp.AddConstraint(std::move(row), Relation::kEqual, payoffs[j]);
  }
  const auto& result =
      detail::RequireOptimal(detail::SolveChecked(lp), "representation pricing");
  return result.value;
}

}  // namespace

std::optional<Book> FindBook(const Market& m) { return BookSearchFor(m).book; }

std::optional<PricingMeasure> FindPricingMeasure(const Market& m) {
  const int n = m.scenario_count();
  LinearProgram lp(Sense::kMaximize, std::vector<Rational>(n, Rational(0)));
  lp.AddConstraint(std::vector<Rational>(n, Rational(1)), Relation::kEqual,
                   Rational(1));
  for (int i = 0; i < m.gamble_count(); ++i) {
    std::vector<Rational> row(m.gambles()[i].payoffs);
    lp.AddConstraint(std::move(row), Relation::kEqual, m.previsions()[i]);
  }
  for (int j = 0; j < n; ++j) lp.SetLowerBound(j, Rational(0));

  LPOutcome outcome = detail::SolveChecked(lp);
  if (std::holds_alternative<InfeasibleOutcome>(outcome)) return std::nullopt;
  const auto& result = detail::RequireOptimal(outcome, "pricing measure search");
  return PricingMeasure(result.primal);
}

CoherenceVerdict CheckCoherence(const Market& m) {
  std::optional<Book> book = FindBook(m);
  std::optional<PricingMeasure> measure = FindPricingMeasure(m);
  if (book.has_value() == measure.has_value()) {
    throw EngineDefectError(
        book.has_value()
            ? "market admits both a book and a pricing measure"
            : "market admits neither a book nor a pricing measure");
  }
  if (book.has_value()) return CoherenceVerdict::Incoherent(*std::move(book));
  return CoherenceVerdict::Coherent(*std::move(measure));
}

void RequireCoherent(const Market& m, const char* operation) {
  const std::optional<Book>& book = BookSearchFor(m).book;
  if (book.has_value()) {
    throw IncoherentMarketError(
        std::string(operation) + ": market admits a book with margin " +
            FormatRational(book->epsilon),
        *book);
  }
}

std::vector<Rational> CombinationPayoff(const Market& m,
                                        const LinearCombination& combo) {
  std::vector<Rational> payoffs(m.scenario_count(), Rational(0));
  for (const auto& [name, coefficient] : combo.terms) {
    const Gamble& g = m.gambles()[ResolveGamble(m, name)];
    for (int j = 0; j < m.scenario_count(); ++j) {
      payoffs[j] += coefficient * g.payoffs[j];
    }
  }
  return payoffs;
}

std::vector<Rational> BookPayoffOnMarket(const Market& m,
                                         const std::vector<BookLeg>& legs) {
  std::vector<Rational> payoffs(m.scenario_count(), Rational(0));
  for (const BookLeg& leg : legs) {
    const std::string* name = std::get_if<std::string>(&leg.instrument);
    if (name == nullptr) {
      throw InputError("market-book leg references an event instrument");
    }
    const int i = ResolveGamble(m, *name);
    for (int j = 0; j < m.scenario_count(); ++j) {
      payoffs[j] +=
          leg.coefficient * (m.previsions()[i] - m.gambles()[i].payoffs[j]);
    }
  }
  return payoffs;
}

Rational LinearExtensionPrice(const Market& m, const LinearCombination& combo) {
  RequireCoherent(m, "linear extension pricing");

  Rational price = 0;
  for (const auto& [name, coefficient] : combo.terms) {
    price += coefficient * m.previsions()[ResolveGamble(m, name)];
  }

  // Well-definedness: every representation of the same payoff vector must
  // carry the same price. The combination itself is feasible, so both
  // optimizations are bounded exactly when prices are representation-free.
  const std::vector<Rational> payoffs = CombinationPayoff(m, combo);
  const Rational cheapest = RepresentationPrice(m, payoffs, Sense::kMinimize);
  const Rational dearest = RepresentationPrice(m, payoffs, Sense::kMaximize);
  if (cheapest != price || dearest != price) {
    throw EngineDefectError(
        "linear extension is representation-dependent on a coherent market");
  }
  return price;
}

}  // namespace dutchbook

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

#include "dutchbook/event_coherence.hpp"

#include <algorithm>

#include "dutchbook/errors.hpp"
#include "lp_support.hpp"

namespace dutchbook {

namespace {

Event FullSpaceEvent(const EventQuoteSystem& q) {
  const int n = q.algebra().space().size();
  return Event::FromMask(n == 64 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << n) - 1));
}

Book MakeEventBook(const EventQuoteSystem& q,
                   const std::vector<std::pair<Event, Rational>>& legs) {
  Book book;
  for (const auto& [event, coefficient] : legs) {
    book.legs.push_back(BookLeg{event, coefficient});
  }
  book.payoff_evidence = BookPayoffOnEvents(q, book.legs);
  book.epsilon = book.MinPayoff();
  return book;
}

}  // namespace

std::vector<Rational> BookPayoffOnEvents(const EventQuoteSystem& q,
                                         const std::vector<BookLeg>& legs) {
  const int n = q.algebra().space().size();
  std::vector<Rational> payoffs(n, Rational(0));
  for (const BookLeg& leg : legs) {
    const Event* event = std::get_if<Event>(&leg.instrument);
    if (event == nullptr) {
      throw InputError("event-book leg references a gamble instrument");
    }
    const Rational& price = q.quote(*event);
    for (int j = 0; j < n; ++j) {
      payoffs[j] += leg.coefficient * (price - event->Indicator(j));
    }
  }
  return payoffs;
}

std::optional<Book> FindBookEvents(const EventQuoteSystem& q,
                                   bool relevant_only) {
  const auto& events = q.algebra().events();
  const int n = q.algebra().space().size();

  std::vector<int> admissible;
  for (size_t i = 0; i < events.size(); ++i) {
    if (!relevant_only || q.quotes()[i] > 0) admissible.push_back(static_cast<int>(i));
  }

  std::vector<std::vector<Rational>> margins(n);
  for (int j = 0; j < n; ++j) {
    margins[j].reserve(admissible.size());
    for (int i : admissible) {
      margins[j].push_back(q.quotes()[i] - events[i].Indicator(j));
    }
  }

  auto search = detail::MaximizeUniformMargin(margins);
  if (!search.has_value()) return std::nullopt;

  Book book;
  for (size_t a = 0; a < admissible.size(); ++a) {
    if (search->coefficients[a] == 0) continue;
    book.legs.push_back(BookLeg{events[admissible[a]], search->coefficients[a]});
  }
  book.epsilon = search->epsilon;
  book.payoff_evidence = std::move(search->payoffs);
  return book;
}

CoherenceVerdict CheckCoherenceEvents(const EventQuoteSystem& q) {
  const AxiomReport report = ValidateMeasureAxioms(q);
  std::optional<Book> book = FindBookEvents(q, /*relevant_only=*/false);

  if (report.empty() == book.has_value()) {
    throw EngineDefectError(
        report.empty()
            ? "axioms hold but the LP found a book"
            : "axioms are violated but the LP found no book");
  }
  if (book.has_value()) {
    return CoherenceVerdict::Incoherent(*std::move(book));
  }
  return CoherenceVerdict::Coherent(AtomMeasureWitness(q));
}

PricingMeasure AtomMeasureWitness(const EventQuoteSystem& q) {
  const int n = q.algebra().space().size();
  std::vector<Rational> weights(n, Rational(0));
  for (const Event& atom : q.algebra().Atoms()) {
    weights[atom.Members().front()] = q.quote(atom);
  }
  return PricingMeasure(std::move(weights));
}

Book ConstructBookFromViolation(const EventQuoteSystem& q,
                                const AxiomViolation& violation) {
  if (const auto* neg = std::get_if<NegativityViolation>(&violation)) {
    if (q.quote(neg->event) != neg->quote || !(neg->quote < 0)) {
      throw InputError("claimed negativity violation does not hold");
    }
    return MakeEventBook(q, {{neg->event, Rational(-1)}});
  }

  if (const auto* norm = std::get_if<NormalizationViolation>(&violation)) {
    const Event full = FullSpaceEvent(q);
    if (q.quote(full) != norm->full_space_quote || norm->full_space_quote == 1) {
      throw InputError("claimed normalization violation does not hold");
    }
    // Underpriced sure bet: buy it; overpriced: sell it.
    const Rational alpha = norm->full_space_quote < 1 ? -1 : 1;
    return MakeEventBook(q, {{full, alpha}});
  }

  const auto& add = std::get<AdditivityViolation>(violation);
  if (!add.left.IsDisjointFrom(add.right)) {
    throw InputError("claimed additivity violation is not over disjoint events");
  }
  const Event joint = add.left.Union(add.right);
  const Rational gap = q.quote(joint) - q.quote(add.left) - q.quote(add.right);
  if (gap != add.gap || gap == 0) {
    throw InputError("claimed additivity violation does not hold");
  }
  // For a positive gap, buy the parts and sell the union; the indicators
  // cancel and the constant gap remains. Mirror the signs otherwise.
  const Rational direction = gap > 0 ? 1 : -1;
  Book book = MakeEventBook(q, {{add.left, -direction},
                                {add.right, -direction},
                                {joint, direction}});
  if (book.epsilon != abs(gap)) {
    throw EngineDefectError("additivity book payoff is not the violation gap");
  }
  return book;
}

}  // namespace dutchbook

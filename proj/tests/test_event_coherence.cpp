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

#include <doctest.h>

#include <algorithm>

#include "dutchbook/errors.hpp"
#include "support/generators.hpp"

using namespace dutchbook;
namespace dbt = dutchbook::testing;

namespace {

EventQuoteSystem TwoScenarioSystem(const Rational& empty, const Rational& a,
                                   const Rational& b, const Rational& full) {
  ScenarioSpace space({"a", "b"});
  EventAlgebra algebra = GenerateAlgebra(space, {Event::FromIndices({0}, 2)});
  return EventQuoteSystem::FromPairs(algebra,
                                     {{Event(), empty},
                                      {Event::FromIndices({0}, 2), a},
                                      {Event::FromIndices({1}, 2), b},
                                      {Event::FromMask(0b11), full}});
}

void CheckBookSelfVerifies(const EventQuoteSystem& q, const Book& book) {
  const auto payoffs = BookPayoffOnEvents(q, book.legs);
  CHECK(payoffs == book.payoff_evidence);
  CHECK(book.epsilon > 0);
  for (const Rational& p : payoffs) CHECK(p >= book.epsilon);
}

}  // namespace

TEST_CASE("a valid probability admits no book") {
  auto q = TwoScenarioSystem(Rational(0), Rational(1, 2), Rational(1, 2),
                             Rational(1));
  CHECK_FALSE(FindBookEvents(q).has_value());
}

TEST_CASE("an underpriced sure bet is a book with margin 1/10") {
  auto q = TwoScenarioSystem(Rational(0), Rational(9, 20), Rational(9, 20),
                             Rational(9, 10));
  auto book = FindBookEvents(q);
  REQUIRE(book.has_value());
  CHECK(book->epsilon == Rational(1, 10));
  CheckBookSelfVerifies(q, *book);
}

TEST_CASE("superadditive union is a book with margin 1/5") {
  auto q = TwoScenarioSystem(Rational(0), Rational(1, 2), Rational(1, 2),
                             Rational(6, 5));
  auto book = FindBookEvents(q);
  REQUIRE(book.has_value());
  CHECK(book->epsilon == Rational(1, 5));
  // The margin-maximal book here pays the gap in both scenarios.
  for (const Rational& p : book->payoff_evidence) CHECK(p == Rational(1, 5));
  CheckBookSelfVerifies(q, *book);
}

TEST_CASE("a negative quote is a book with margin 1/10") {
  auto q = TwoScenarioSystem(Rational(0), Rational(-1, 10), Rational(11, 10),
                             Rational(1));
  auto book = FindBookEvents(q);
  REQUIRE(book.has_value());
  CHECK(book->epsilon == Rational(1, 10));
  CheckBookSelfVerifies(q, *book);
}

TEST_CASE("relevant-only book search skips nonpositive quotes") {
  // The only exploitable quote is the negative one on {a}, which is not a
  // relevant event; restricted search must come back empty.
  auto q = TwoScenarioSystem(Rational(0), Rational(-1, 10), Rational(1, 2),
                             Rational(1));
  CHECK(FindBookEvents(q, /*relevant_only=*/false).has_value());
  CHECK_FALSE(FindBookEvents(q, /*relevant_only=*/true).has_value());
}

TEST_CASE("check_coherence_events: a valid probability is its own witness") {
  auto q = TwoScenarioSystem(Rational(0), Rational(3, 10), Rational(7, 10),
                             Rational(1));
  CoherenceVerdict verdict = CheckCoherenceEvents(q);
  CHECK(verdict.coherent);
  REQUIRE(verdict.measure.has_value());
  CHECK(verdict.measure->weights() ==
        std::vector<Rational>{Rational(3, 10), Rational(7, 10)});
  CHECK_FALSE(verdict.book.has_value());
}

TEST_CASE("check_coherence_events returns the book when incoherent") {
  auto q = TwoScenarioSystem(Rational(0), Rational(9, 20), Rational(9, 20),
                             Rational(9, 10));
  CoherenceVerdict verdict = CheckCoherenceEvents(q);
  CHECK_FALSE(verdict.coherent);
  REQUIRE(verdict.book.has_value());
  CHECK(verdict.book->epsilon == Rational(1, 10));
  CHECK_FALSE(verdict.measure.has_value());
}

TEST_CASE("witness measure prices every algebra event on coarse algebras") {
  // Algebra {∅, Ω} over two scenarios: the atom is Ω, its quote lands on
  // the first scenario.
  ScenarioSpace space({"a", "b"});
  EventAlgebra algebra = GenerateAlgebra(space, {});
  auto q = EventQuoteSystem::FromPairs(
      algebra, {{Event(), Rational(0)}, {Event::FromMask(0b11), Rational(1)}});
  CoherenceVerdict verdict = CheckCoherenceEvents(q);
  REQUIRE(verdict.coherent);
  CHECK(verdict.measure->weights() ==
        std::vector<Rational>{Rational(1), Rational(0)});

  for (int i = 0; i < q.algebra().size(); ++i) {
    const Event& e = q.algebra().events()[i];
    std::vector<Rational> indicator;
    for (int j = 0; j < 2; ++j) indicator.push_back(e.Indicator(j));
    CHECK(Expectation(*verdict.measure, indicator) == q.quotes()[i]);
  }
}

TEST_CASE("construct_book_from_violation: negative quote (case i)") {
  auto q = TwoScenarioSystem(Rational(0), Rational(-1, 10), Rational(11, 10),
                             Rational(1));
  Book book = ConstructBookFromViolation(
      q, NegativityViolation{Event::FromIndices({0}, 2), Rational(-1, 10)});
  REQUIRE(book.legs.size() == 1);
  CHECK(std::get<Event>(book.legs[0].instrument) == Event::FromIndices({0}, 2));
  CHECK(book.legs[0].coefficient == -1);
  CHECK(book.payoff_evidence ==
        std::vector<Rational>{Rational(11, 10), Rational(1, 10)});
  CHECK(book.epsilon == Rational(1, 10));
}

TEST_CASE("construct_book_from_violation: normalization (case ii)") {
  auto q = TwoScenarioSystem(Rational(0), Rational(9, 20), Rational(9, 20),
                             Rational(9, 10));
  Book book =
      ConstructBookFromViolation(q, NormalizationViolation{Rational(9, 10)});
  REQUIRE(book.legs.size() == 1);
  CHECK(book.legs[0].coefficient == -1);  // underpriced: buy
  for (const Rational& p : book.payoff_evidence) CHECK(p == Rational(1, 10));
  CHECK(book.epsilon == Rational(1, 10));
}

TEST_CASE("construct_book_from_violation: no violation at the boundary") {
  auto q = TwoScenarioSystem(Rational(0), Rational(1, 2), Rational(1, 2),
                             Rational(1));
  CHECK_THROWS_AS(
      ConstructBookFromViolation(q, NormalizationViolation{Rational(1)}),
      InputError);
  CHECK_THROWS_AS(
      ConstructBookFromViolation(
          q, NegativityViolation{Event::FromIndices({0}, 2), Rational(1, 2)}),
      InputError);
}

TEST_CASE("construct_book_from_violation: additivity gap (case iii)") {
  auto q = TwoScenarioSystem(Rational(0), Rational(1, 2), Rational(1, 2),
                             Rational(6, 5));
  Book book = ConstructBookFromViolation(
      q, AdditivityViolation{Event::FromIndices({0}, 2),
                             Event::FromIndices({1}, 2), Rational(1, 5)});
  CHECK(book.legs.size() == 3);
  for (const Rational& p : book.payoff_evidence) CHECK(p == Rational(1, 5));
  CHECK(book.epsilon == Rational(1, 5));

  // Subadditive direction: mirrored signs, same magnitude.
  auto sub = TwoScenarioSystem(Rational(0), Rational(1, 2), Rational(1, 2),
                               Rational(4, 5));
  Book mirrored = ConstructBookFromViolation(
      sub, AdditivityViolation{Event::FromIndices({0}, 2),
                               Event::FromIndices({1}, 2), Rational(-1, 5)});
  for (const Rational& p : mirrored.payoff_evidence) CHECK(p == Rational(1, 5));
  CHECK(mirrored.epsilon == Rational(1, 5));
}

TEST_CASE("every reported violation constructs a verifying book") {
  dbt::Rng rng(55);
  int books = 0;
  for (int it = 0; it < 120; ++it) {
    EventQuoteSystem q = dbt::RandomQuoteSystem(rng);
    AxiomReport report = ValidateMeasureAxioms(q);
    const int n = q.algebra().space().size();
    const Event full =
        Event::FromMask(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    for (const AxiomViolation& violation : report.violations) {
      Book book = ConstructBookFromViolation(q, violation);
      ++books;
      CHECK(BookPayoffOnEvents(q, book.legs) == book.payoff_evidence);
      CHECK(book.epsilon > 0);

      // The payoff floor equals the violation magnitude, except for a
      // negative quote on the full space, where the bet also collects the
      // sure indicator and the floor is strictly better.
      if (const auto* neg = std::get_if<NegativityViolation>(&violation)) {
        if (neg->event == full) {
          CHECK(book.epsilon == 1 - neg->quote);
        } else {
          CHECK(book.epsilon == -neg->quote);
        }
      } else if (const auto* norm = std::get_if<NormalizationViolation>(&violation)) {
        CHECK(book.epsilon == abs(1 - norm->full_space_quote));
      } else {
        CHECK(book.epsilon ==
              abs(std::get<AdditivityViolation>(violation).gap));
      }
    }
  }
  CHECK(books > 100);
}

TEST_CASE("axiom route and LP route agree on random systems") {
  dbt::Rng rng(77);
  int coherent = 0, incoherent = 0;
  for (int it = 0; it < 150; ++it) {
    EventQuoteSystem q = dbt::RandomQuoteSystem(rng);
    const bool axioms_ok = ValidateMeasureAxioms(q).empty();
    auto book = FindBookEvents(q);
    CHECK(axioms_ok == !book.has_value());
    if (book.has_value()) {
      ++incoherent;
      CheckBookSelfVerifies(q, *book);
    } else {
      ++coherent;
    }
    // The assembled verdict runs the same cross-check internally.
    CHECK_NOTHROW(CheckCoherenceEvents(q));
  }
  CHECK(coherent > 15);
  CHECK(incoherent > 15);
}

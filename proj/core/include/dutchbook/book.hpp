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

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dutchbook/errors.hpp"
#include "dutchbook/model.hpp"

namespace dutchbook {

// One leg of a betting strategy: an instrument (an algebra event, or a
// market gamble referenced by name) and its stake coefficient. With the
// payoff convention Σ coeff·(price - payoff(ω)), a positive coefficient
// sells the instrument at its quote and a negative one buys it.
struct BookLeg {
  std::variant<Event, std::string> instrument;
  Rational coefficient;
};

// A certificate of incoherence: a finite combination of accepted bets
// whose payoff is at least `epsilon` in every scenario. `payoff_evidence`
// stores Σ coeff_i·(price_i - payoff_i(ω)) per scenario, exactly; for
// certificates on the interval domain it stores the payoff at the
// engine's candidate evaluation points instead (see interval.hpp).
// epsilon == 0 marks a strict-positivity-only certificate.
struct Book {
  std::vector<BookLeg> legs;
  Rational epsilon;
  std::vector<Rational> payoff_evidence;

  Rational MinPayoff() const;
};

// Outcome of a coherence decision: exactly one witness, matching the
// verdict — a pricing measure when coherent, a book when not.
struct CoherenceVerdict {
  bool coherent;
  std::optional<Book> book;
  std::optional<PricingMeasure> measure;

  static CoherenceVerdict Coherent(PricingMeasure witness);
  static CoherenceVerdict Incoherent(Book witness);
};

// Thrown when a pricing operation is invoked against an incoherent
// market; carries the offending book.
class IncoherentMarketError : public std::runtime_error {
 public:
  IncoherentMarketError(const std::string& message, Book book)
      : std::runtime_error(message), book_(std::move(book)) {}
  const Book& book() const { return book_; }

 private:
  Book book_;
};

}  // namespace dutchbook

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
//
// Coherence of bookmaker quotes on an event algebra: book search by
// margin-maximization LP, the axioms-vs-book equivalence decision, and
// explicit book construction from individual axiom violations.

#pragma once

#include <optional>

#include "dutchbook/book.hpp"
#include "dutchbook/model.hpp"

namespace dutchbook {

// Searches for a book over the admissible events: all events by default,
// only those with quote > 0 when `relevant_only` is set. Returns a book
// maximizing the uniform margin ε under the normalization Σ|α| ≤ 1, or
// nothing when no combination of bets guarantees a positive payoff.
//
// The default admits all events: the relevant-events reading would leave
// negative quotes unconstrained, and the coherence ⟺ probability-axioms
// equivalence is stated over unrestricted bets.
std::optional<Book> FindBookEvents(const EventQuoteSystem& q,
                                   bool relevant_only = false);

// Decides coherence twice — by axiom validation and by the book LP — and
// insists the routes agree. Coherent systems get the measure witness
// (quotes restricted to atoms, zero off the atom representatives);
// incoherent ones get the maximizing book.
CoherenceVerdict CheckCoherenceEvents(const EventQuoteSystem& q);

// The explicit book behind a single axiom violation:
//   * quote(A) < 0: buy 1_A (α = -1), payoff floor -quote(A);
//   * quote(Ω) ≠ 1: one leg on Ω, buying when underpriced and selling when
//     overpriced, constant payoff |1 - quote(Ω)|;
//   * additivity gap on disjoint A, B: trade A and B against A∪B with unit
//     stakes, constant payoff |gap|.
// Throws InputError when the violation does not actually hold for q.
Book ConstructBookFromViolation(const EventQuoteSystem& q,
                                const AxiomViolation& violation);

// Recomputes Σ α_i·(quote(A_i) - 1_{A_i}(ω)) per scenario for legs over
// algebra events. Used to re-verify certificates.
std::vector<Rational> BookPayoffOnEvents(const EventQuoteSystem& q,
                                         const std::vector<BookLeg>& legs);

// The coherence witness measure: quote of each atom placed on its lowest
// scenario index, zero elsewhere. Precondition: the axiom report is empty.
PricingMeasure AtomMeasureWitness(const EventQuoteSystem& q);

}  // namespace dutchbook

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
// Coherence of previsions on general gambles: book search, pricing-measure
// existence (the two are equivalent on finite scenario spaces), and the
// positive linear extension of the prevision to the market span.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dutchbook/book.hpp"
#include "dutchbook/model.hpp"

namespace dutchbook {

// An element of the market span: Σ coefficient · gamble, gambles referenced
// by name.
struct LinearCombination {
  std::vector<std::pair<std::string, Rational>> terms;
};

// Book search over the market's gambles, same margin-maximization LP as
// the event case with gambles in place of indicators. The result is cached
// on the market value, so repeated pricing calls do not re-solve the LP.
std::optional<Book> FindBook(const Market& m);

// Feasibility of { q ≥ 0, Σq = 1, E_q[h] = π(h) for all h }. Returns a
// deterministic vertex when feasible. A measure exists if and only if
// FindBook returns nothing.
std::optional<PricingMeasure> FindPricingMeasure(const Market& m);

// Convenience verdict: the book when incoherent, the pricing measure when
// coherent. Throws EngineDefectError if the book search and the measure
// search ever disagree.
CoherenceVerdict CheckCoherence(const Market& m);

// The linear extension price L(f) = Σ α_i·π(f_i) of a combination, with a
// well-definedness check: the cheapest and dearest representations of the
// same payoff vector are re-priced by LP and must agree with the direct
// price exactly. Throws IncoherentMarketError (with the book) when the
// market is incoherent, InputError on unresolved gamble names, and
// EngineDefectError if representation dependence is ever detected.
Rational LinearExtensionPrice(const Market& m, const LinearCombination& combo);

// The payoff vector Σ coefficient · gamble of a combination.
std::vector<Rational> CombinationPayoff(const Market& m,
                                        const LinearCombination& combo);

// Recomputes Σ β_i·(π(f_i) - f_i(ω)) per scenario for legs over market
// gambles. Used to re-verify certificates.
std::vector<Rational> BookPayoffOnMarket(const Market& m,
                                         const std::vector<BookLeg>& legs);

// Throws IncoherentMarketError carrying the book unless m is coherent.
void RequireCoherent(const Market& m, const char* operation);

}  // namespace dutchbook

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
// The arbitrage taxonomy on finite markets: uniformly strong (payoff ≥ ε >
// 0 everywhere, i.e. a book), strong (payoff > 0 everywhere) and
// ℙ-arbitrage (ℙ-a.s. nonnegative payoff, positive with positive
// ℙ-probability), plus the full-support martingale-measure search. On a
// finite scenario space strong and uniformly strong coincide; the genuine
// gap between them lives in the interval module.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dutchbook/book.hpp"
#include "dutchbook/model.hpp"

namespace dutchbook {

// Strategy with ℙ-a.s. nonnegative payoff and strictly positive expected
// gain. The book's payoff evidence covers all scenarios, including
// ℙ-negligible ones where it may be negative.
struct PArbitrageCertificate {
  Book book;
  ReferenceMeasure reference;
  Rational expected_gain;
};

struct ArbitrageReport {
  std::optional<Book> uniformly_strong;
  std::optional<Book> strong;
  std::optional<PArbitrageCertificate> p_arbitrage;
  std::vector<std::string> notes;
};

// Classifies the market. Uniformly strong arbitrage comes from the
// margin-maximization LP; strong arbitrage from a per-scenario sequence of
// LPs (maximize each scenario's payoff subject to nonnegativity
// everywhere, then average the optimal strategies); ℙ-arbitrage from
// maximizing the ℙ-expected payoff subject to nonnegativity on the support
// of ℙ. Every strict decision is an exact "LP optimum > 0" test. The
// implication chain (uniformly strong ⟹ strong ⟹ ℙ-arbitrage) is asserted
// on the assembled report.
//
// Without a reference measure the ℙ-arbitrage level is skipped (with a
// note). Throws InputError when the reference length does not match the
// scenario count.
ArbitrageReport Classify(const Market& m,
                         const std::optional<ReferenceMeasure>& reference);

// Maximizes t subject to q ≥ t·1, Σq = 1 and the pricing equalities;
// returns the measure iff the optimum is strictly positive. A strictly
// positive martingale measure exists iff no arbitrage in the classical
// sense does.
std::optional<PricingMeasure> FindFullSupportMeasure(const Market& m);

// Bets on algebra events recast as a market of indicator gambles, named by
// their event description. Bridges the event-coherence world into the
// classifier and the hedging module.
Market IndicatorMarket(const EventQuoteSystem& q);

}  // namespace dutchbook

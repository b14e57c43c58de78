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
// Deterministic random instances for the property and acceptance suites.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dutchbook/interval.hpp"
#include "dutchbook/model.hpp"
#include "dutchbook/ratlp.hpp"

namespace dutchbook::testing {

using Rng = std::mt19937_64;

inline int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Numerator in [-max_abs_num, max_abs_num], denominator in [1, max_den].
Rational RandomRational(Rng& rng, int max_abs_num, int max_den);

// A quote from the acceptance range [-1/2, 3/2] with small denominators.
Rational RandomQuote(Rng& rng);

// Exact probability vector; strictly positive when full_support.
PricingMeasure RandomMeasure(Rng& rng, int size, bool full_support);

// Power-set quote system on 2-4 atoms. Mixes coherent systems (additive
// extensions of a random measure), single-quote perturbations of those,
// and fully random quotes.
EventQuoteSystem RandomQuoteSystem(Rng& rng);

// Market with 2-6 scenarios and the unit plus up to 3 integer gambles.
// When `coherent`, previsions are expectations under a hidden random
// measure, which guarantees coherence; otherwise previsions are random
// (and usually, but not always, incoherent).
Market RandomMarket(Rng& rng, bool coherent);

// Integer-payoff query gamble outside the market.
Gamble RandomQueryGamble(Rng& rng, int scenario_count, const std::string& name);

// Piecewise-linear gamble with up to 3 pieces and small rational data.
PiecewiseLinearGamble RandomPiecewiseGamble(Rng& rng, const std::string& name);

// Interval market with the constant 1 plus up to 2 random gambles.
IntervalMarket RandomIntervalMarket(Rng& rng);

// Random small LP within the brute-force oracle's reach: 1-4 variables,
// 0-6 constraints, sparse bounds, integer data.
LinearProgram RandomSmallLP(Rng& rng);

}  // namespace dutchbook::testing

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
// Superhedging and subhedging of a gamble outside the market span, the
// dual range of expectations over consistent pricing measures, and the
// coherent price interval. The primal and dual sides are computed by
// separate LPs and compared; their exact agreement (zero duality gap) is a
// standing self-check of the engine.

#pragma once

#include "dutchbook/book.hpp"
#include "dutchbook/model.hpp"
#include "dutchbook/prevision.hpp"

namespace dutchbook {

struct HedgeResult {
  Rational value;
  LinearCombination hedge;  // zero-coefficient terms omitted
};

// Cheapest market combination dominating g from above. Always feasible
// (the unit gamble scales above any payoff); bounded because the market is
// coherent. Throws IncoherentMarketError otherwise.
HedgeResult Superhedge(const Market& m, const Gamble& g);

// Dearest market combination dominated by g. Mirror of Superhedge.
HedgeResult Subhedge(const Market& m, const Gamble& g);

// Extremal expectations of g over all pricing measures consistent with
// the market, with attaining measures.
struct MeasureRange {
  Rational lower;
  Rational upper;
  PricingMeasure minimizer;
  PricingMeasure maximizer;
};

MeasureRange ComputeMeasureRange(const Market& m, const Gamble& g);

// The coherent price interval with its full certificate bundle: hedges
// achieving both endpoints and measures attaining both extremal
// expectations.
struct PriceInterval {
  Rational lower;
  Rational upper;
  LinearCombination lower_hedge;
  LinearCombination upper_hedge;
  PricingMeasure lower_measure;
  PricingMeasure upper_measure;
};

// Assembles Superhedge, Subhedge and ComputeMeasureRange and insists on
// exact equality of the primal and dual values on both sides. A duality
// gap is impossible with a correct LP layer and raises EngineDefectError.
PriceInterval ComputePriceInterval(const Market& m, const Gamble& g);

// Extends the market with g priced at g0 and decides coherence of the
// extension. Coherent exactly when g0 lies in the closed price interval,
// endpoints included.
CoherenceVerdict CheckExtensionCoherence(const Market& m, const Gamble& g,
                                         const Rational& g0);

}  // namespace dutchbook

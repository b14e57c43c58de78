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

#include "dutchbook/book.hpp"

#include <algorithm>

namespace dutchbook {

Rational Book::MinPayoff() const {
  if (payoff_evidence.empty()) {
    throw EngineDefectError("book without payoff evidence");
  }
  return *std::min_element(payoff_evidence.begin(), payoff_evidence.end());
}

CoherenceVerdict CoherenceVerdict::Coherent(PricingMeasure witness) {
  return CoherenceVerdict{true, std::nullopt, std::move(witness)};
}

CoherenceVerdict CoherenceVerdict::Incoherent(Book witness) {
  return CoherenceVerdict{false, std::move(witness), std::nullopt};
}

}  // namespace dutchbook

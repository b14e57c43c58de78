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
// Internal helpers shared by the coherence, arbitrage and hedging modules.
// Not installed.

#pragma once

#include <optional>
#include <vector>

#include "dutchbook/errors.hpp"
#include "dutchbook/ratlp.hpp"

namespace dutchbook::detail {

// Solve plus the mandatory certificate self-check.
inline LPOutcome SolveChecked(const LinearProgram& lp) {
  LPOutcome outcome = Solve(lp);
  if (!VerifyCertificate(lp, outcome)) {
    throw EngineDefectError("LP certificate failed self-verification");
  }
  return outcome;
}

inline const OptimalOutcome& RequireOptimal(const LPOutcome& outcome,
                                            const char* where) {
  if (const auto* opt = std::get_if<OptimalOutcome>(&outcome)) return *opt;
  throw EngineDefectError(std::string(where) +
                          ": expected an optimal LP outcome");
}

// Margin-maximization scheme shared by every book search. `margins` has
// one row per scenario (or candidate point) and one column per instrument,
// holding price_i - payoff_i(ω). Maximizes the uniform margin ε subject to
// Σ|coeff| ≤ 1, splitting each coefficient into nonnegative parts. Without
// the normalization the LP would be unbounded whenever any book exists;
// with it, "book exists ⟺ optimal ε > 0" is a clean decision procedure.
struct MarginSearch {
  std::vector<Rational> coefficients;  // one per instrument, zeros kept
  Rational epsilon;                    // the optimal uniform margin, > 0
  std::vector<Rational> payoffs;       // per row, exactly recomputed
};

std::optional<MarginSearch> MaximizeUniformMargin(
    const std::vector<std::vector<Rational>>& margins);

// Maximizes a single linear functional of the strategy coefficients
// subject to every row payoff ≥ 0 and Σ|coeff| ≤ 1. `weights` assigns the
// objective weight of each row's payoff. Returns the optimal value and
// coefficients. Used by the arbitrage classifier's per-scenario stage.
struct NonnegativePayoffSearch {
  Rational value;
  std::vector<Rational> coefficients;
};

NonnegativePayoffSearch MaximizeWeightedPayoff(
    const std::vector<std::vector<Rational>>& margins,
    const std::vector<Rational>& weights,
    const std::vector<int>& nonnegative_rows);

// Payoff of a coefficient vector against a margin matrix.
std::vector<Rational> MarginPayoffs(
    const std::vector<std::vector<Rational>>& margins,
    const std::vector<Rational>& coefficients);

}  // namespace dutchbook::detail

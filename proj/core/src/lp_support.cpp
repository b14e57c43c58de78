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

#include "lp_support.hpp"

#include <algorithm>

namespace dutchbook::detail {

namespace {

size_t InstrumentCount(const std::vector<std::vector<Rational>>& margins) {
  size_t k = margins.empty() ? 0 : margins.front().size();
  for (const auto& row : margins) {
    if (row.size() != k) {
      throw EngineDefectError("ragged margin matrix");
    }
  }
  return k;
}

// Variables: plus-part and minus-part per instrument. The actual
// coefficient vector is plus - minus.
std::vector<Rational> SplitCoefficients(const std::vector<Rational>& primal,
                                        size_t instrument_count) {
  std::vector<Rational> coefficients(instrument_count);
  for (size_t i = 0; i < instrument_count; ++i) {
    coefficients[i] = primal[i] - primal[instrument_count + i];
  }
  return coefficients;
}

}  // namespace

std::vector<Rational> MarginPayoffs(
    const std::vector<std::vector<Rational>>& margins,
    const std::vector<Rational>& coefficients) {
  std::vector<Rational> payoffs;
  payoffs.reserve(margins.size());
  for (const auto& row : margins) {
    Rational value = 0;
    for (size_t i = 0; i < row.size(); ++i) value += coefficients[i] * row[i];
    payoffs.push_back(std::move(value));
  }
  return payoffs;
}

std::optional<MarginSearch> MaximizeUniformMargin(
    const std::vector<std::vector<Rational>>& margins) {
  const size_t k = InstrumentCount(margins);
  const size_t eps = 2 * k;  // eps variable index

  std::vector<Rational> objective(2 * k + 1, Rational(0));
  objective[eps] = 1;
  LinearProgram lp(Sense::kMaximize, std::move(objective));

  for (const auto& row : margins) {
    std::vector<Rational> coeffs(2 * k + 1, Rational(0));
    for (size_t i = 0; i < k; ++i) {
      coeffs[i] = row[i];
      coeffs[k + i] = -row[i];
    }
    coeffs[eps] = -1;
    lp.AddConstraint(std::move(coeffs), Relation::kGreaterEqual, Rational(0));
  }
  {
    std::vector<Rational> coeffs(2 * k + 1, Rational(1));
    coeffs[eps] = 0;
    lp.AddConstraint(std::move(coeffs), Relation::kLessEqual, Rational(1));
  }
  for (size_t i = 0; i < 2 * k; ++i) {
    lp.SetLowerBound(static_cast<int>(i), Rational(0));
  }

  const auto& result = RequireOptimal(SolveChecked(lp), "margin search");
  if (result.value <= 0) return std::nullopt;

  MarginSearch out;
  out.coefficients = SplitCoefficients(result.primal, k);
  out.epsilon = result.value;
  out.payoffs = MarginPayoffs(margins, out.coefficients);
  if (!out.payoffs.empty() &&
      *std::min_element(out.payoffs.begin(), out.payoffs.end()) != out.epsilon) {
    throw EngineDefectError("margin LP optimum does not match the payoff floor");
  }
  return out;
}

NonnegativePayoffSearch MaximizeWeightedPayoff(
    const std::vector<std::vector<Rational>>& margins,
    const std::vector<Rational>& weights,
    const std::vector<int>& nonnegative_rows) {
  const size_t k = InstrumentCount(margins);
  if (weights.size() != margins.size()) {
    throw EngineDefectError("weighted payoff search: weight/row mismatch");
  }

  std::vector<Rational> objective(2 * k, Rational(0));
  for (size_t r = 0; r < margins.size(); ++r) {
    if (weights[r] == 0) continue;
    for (size_t i = 0; i < k; ++i) {
      objective[i] += weights[r] * margins[r][i];
      objective[k + i] -= weights[r] * margins[r][i];
    }
  }
  LinearProgram lp(Sense::kMaximize, std::move(objective));

  for (int r : nonnegative_rows) {
    std::vector<Rational> coeffs(2 * k, Rational(0));
    for (size_t i = 0; i < k; ++i) {
      coeffs[i] = margins[r][i];
      coeffs[k + i] = -margins[r][i];
    }
    lp.AddConstraint(std::move(coeffs), Relation::kGreaterEqual, Rational(0));
  }
  lp.AddConstraint(std::vector<Rational>(2 * k, Rational(1)),
                   Relation::kLessEqual, Rational(1));
  for (size_t i = 0; i < 2 * k; ++i) {
    lp.SetLowerBound(static_cast<int>(i), Rational(0));
  }

  const auto& result = RequireOptimal(SolveChecked(lp), "payoff search");
  return NonnegativePayoffSearch{result.value, SplitCoefficients(result.primal, k)};
}

}  // namespace dutchbook::detail

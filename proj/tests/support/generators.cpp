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

#include "generators.hpp"

#include <algorithm>
#include <array>

namespace dutchbook::testing {

namespace {

const char* kLabels[] = {"a", "b", "c", "d", "e", "f"};

std::vector<Rational> IntegerPayoffs(Rng& rng, int n, int lo, int hi) {
  std::vector<Rational> payoffs(n);
  for (int j = 0; j < n; ++j) payoffs[j] = UniformInt(rng, lo, hi);
  return payoffs;
}

}  // namespace

Rational RandomRational(Rng& rng, int max_abs_num, int max_den) {
  const int den = UniformInt(rng, 1, max_den);
  const int num = UniformInt(rng, -max_abs_num, max_abs_num);
  return Rational(num, den);
}

Rational RandomQuote(Rng& rng) {
  const int den = UniformInt(rng, 1, 8);
  const int num = UniformInt(rng, -den / 2, den + den / 2);
  return Rational(num, den);
}

PricingMeasure RandomMeasure(Rng& rng, int size, bool full_support) {
  std::vector<Rational> weights(size);
  Rational total = 0;
  do {
    total = 0;
    for (int j = 0; j < size; ++j) {
      weights[j] = UniformInt(rng, full_support ? 1 : 0, 9);
      total += weights[j];
    }
  } while (total == 0);
  for (Rational& w : weights) w /= total;
  return PricingMeasure(std::move(weights));
}

EventQuoteSystem RandomQuoteSystem(Rng& rng) {
  const int atoms = UniformInt(rng, 2, 4);
  ScenarioSpace space(
      std::vector<std::string>(kLabels, kLabels + atoms));
  std::vector<Event> singletons;
  for (int j = 0; j < atoms; ++j) {
    singletons.push_back(Event::FromIndices({j}, atoms));
  }
  EventAlgebra algebra = GenerateAlgebra(space, singletons);

  std::vector<Rational> quotes(algebra.size());
  const int flavor = UniformInt(rng, 0, 3);
  if (flavor == 0) {
    // Fully random quotes: almost surely incoherent.
    for (Rational& q : quotes) q = RandomQuote(rng);
  } else {
    // Additive extension of a random measure, optionally perturbed in one
    // entry: exercises the coherent side and near-coherent boundary.
    PricingMeasure measure = RandomMeasure(rng, atoms, false);
    for (int i = 0; i < algebra.size(); ++i) {
      Rational mass = 0;
      for (int j = 0; j < atoms; ++j) {
        if (algebra.events()[i].Contains(j)) mass += measure.weights()[j];
      }
      quotes[i] = mass;
    }
    if (flavor == 1) {
      const int slot = UniformInt(rng, 0, algebra.size() - 1);
      quotes[slot] += RandomRational(rng, 2, 6);
    }
  }
  return EventQuoteSystem(std::move(algebra), std::move(quotes));
}

Market RandomMarket(Rng& rng, bool coherent) {
  const int n = UniformInt(rng, 2, 6);
  ScenarioSpace space(std::vector<std::string>(kLabels, kLabels + n));

  std::vector<Gamble> gambles = {UnitGamble(n)};
  const int extra = UniformInt(rng, 0, 3);
  for (int i = 0; i < extra; ++i) {
    gambles.push_back(
        Gamble{"g" + std::to_string(i + 1), IntegerPayoffs(rng, n, -3, 5)});
  }

  std::vector<Rational> previsions;
  if (coherent) {
    PricingMeasure hidden = RandomMeasure(rng, n, false);
    for (const Gamble& g : gambles) previsions.push_back(Expectation(hidden, g));
  } else {
    for (size_t i = 0; i < gambles.size(); ++i) {
      previsions.push_back(RandomRational(rng, 6, 4));
    }
  }
  return Market(std::move(space), std::move(gambles), std::move(previsions));
}

Gamble RandomQueryGamble(Rng& rng, int scenario_count, const std::string& name) {
  return Gamble{name, IntegerPayoffs(rng, scenario_count, -3, 5)};
}

PiecewiseLinearGamble RandomPiecewiseGamble(Rng& rng, const std::string& name) {
  const int pieces = UniformInt(rng, 1, 3);
  std::vector<Rational> breakpoints = {Rational(0)};
  // Interior breakpoints from a fixed fine grid, strictly increasing.
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < pieces - 1) {
    int cut = UniformInt(rng, 1, 11);
    if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
  }
  std::sort(cuts.begin(), cuts.end());
  for (int cut : cuts) breakpoints.push_back(Rational(cut, 12));
  breakpoints.push_back(Rational(1));

  std::vector<AffinePiece> affine;
  for (int i = 0; i < pieces; ++i) {
    affine.push_back(
        AffinePiece{RandomRational(rng, 4, 3), RandomRational(rng, 3, 3)});
  }
  return PiecewiseLinearGamble(name, std::move(breakpoints), std::move(affine));
}

IntervalMarket RandomIntervalMarket(Rng& rng) {
  std::vector<PiecewiseLinearGamble> gambles = {
      PiecewiseLinearGamble::Constant("unit", Rational(1))};
  const int extra = UniformInt(rng, 1, 2);
  for (int i = 0; i < extra; ++i) {
    gambles.push_back(RandomPiecewiseGamble(rng, "g" + std::to_string(i + 1)));
  }

  std::vector<Rational> previsions = {Rational(1)};
  for (int i = 0; i < extra; ++i) previsions.push_back(RandomRational(rng, 3, 4));
  return IntervalMarket(std::move(gambles), std::move(previsions));
}

LinearProgram RandomSmallLP(Rng& rng) {
  const int n = UniformInt(rng, 1, 4);
  std::vector<Rational> objective(n);
  for (Rational& c : objective) c = UniformInt(rng, -4, 4);
  LinearProgram lp(UniformInt(rng, 0, 1) == 0 ? Sense::kMaximize : Sense::kMinimize,
                   std::move(objective));

  const int rows = UniformInt(rng, 0, 6);
  for (int r = 0; r < rows; ++r) {
    std::vector<Rational> coeffs(n);
    for (Rational& a : coeffs) a = UniformInt(rng, -4, 4);
    const Relation rel = std::array{Relation::kLessEqual, Relation::kEqual,
                                    Relation::kGreaterEqual}[UniformInt(rng, 0, 2)];
    lp.AddConstraint(std::move(coeffs), rel, Rational(UniformInt(rng, -6, 6)));
  }
  for (int j = 0; j < n; ++j) {
    if (UniformInt(rng, 0, 2) == 0) lp.SetLowerBound(j, Rational(UniformInt(rng, -3, 1)));
    if (UniformInt(rng, 0, 2) == 0) lp.SetUpperBound(j, Rational(UniformInt(rng, 0, 5)));
  }
  return lp;
}

}  // namespace dutchbook::testing

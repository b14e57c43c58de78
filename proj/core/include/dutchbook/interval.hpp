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
// Markets on the interval Ω = (0,1]: gambles are piecewise-linear
// functions with rational breakpoints, pieces left-open and right-closed
// so the point 0 is never in the domain. This is the smallest function
// class where infima can fail to be attained, which is exactly what
// separates strong from uniformly strong arbitrage and makes countable
// additivity fail while coherence survives.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dutchbook/book.hpp"
#include "dutchbook/model.hpp"

namespace dutchbook {

struct AffinePiece {
  Rational slope;
  Rational intercept;
};

// A function on (0,1]: on the i-th piece (b_i, b_{i+1}] it is
// slope_i·ω + intercept_i. Breakpoints satisfy 0 = b_0 < … < b_k = 1, so
// the domain has no gaps or overlaps.
class PiecewiseLinearGamble {
 public:
  PiecewiseLinearGamble(std::string name, std::vector<Rational> breakpoints,
                        std::vector<AffinePiece> pieces);

  static PiecewiseLinearGamble Constant(std::string name, Rational value);
  // f(ω) = ω.
  static PiecewiseLinearGamble Identity(std::string name);

  const std::string& name() const { return name_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }

  // Evaluation at ω ∈ (0,1]; throws InputError outside the domain.
  Rational ValueAt(const Rational& point) const;
  // One-sided limit as ω → b_i from the right (never a value of the
  // function at b_i itself when b_i opens the piece).
  Rational PieceLeftLimit(int piece) const;
  Rational PieceRightValue(int piece) const;

  bool IsConstantOne() const;

 private:
  std::string name_;
  std::vector<Rational> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

// constant + Σ coefficient·gamble, on the merged breakpoint grid.
PiecewiseLinearGamble CombineAffine(
    std::string name, const Rational& constant,
    const std::vector<std::pair<const PiecewiseLinearGamble*, Rational>>& terms);

// Exact infimum over (0,1]. Candidates are piece right endpoints and
// one-sided limits at open left endpoints; `attained` is false exactly
// when only limit candidates achieve the minimum, and `location` is then
// the limit point.
struct InfResult {
  Rational value;
  bool attained;
  Rational location;
};

InfResult ExactInf(const PiecewiseLinearGamble& f);

// Exact test for f(ω) > 0 at every ω ∈ (0,1]: per piece, the right value
// must be positive and the left limit nonnegative.
bool IsStrictlyPositive(const PiecewiseLinearGamble& f);

// A family of quoted piecewise-linear gambles containing the constant 1.
class IntervalMarket {
 public:
  IntervalMarket(std::vector<PiecewiseLinearGamble> gambles,
                 std::vector<Rational> previsions);

  const std::vector<PiecewiseLinearGamble>& gambles() const { return gambles_; }
  const std::vector<Rational>& previsions() const { return previsions_; }
  int gamble_count() const { return static_cast<int>(gambles_.size()); }
  int IndexOf(std::string_view name) const;

 private:
  std::vector<PiecewiseLinearGamble> gambles_;
  std::vector<Rational> previsions_;
};

// The strategy payoff ω ↦ Σ β_i·(π(f_i) - f_i(ω)) as a function.
PiecewiseLinearGamble StrategyPayoff(const IntervalMarket& m,
                                     const std::vector<Rational>& coefficients);

// One payoff evaluation backing a certificate: either the value at a
// right-closed endpoint or the one-sided limit at an open left endpoint.
struct PayoffSample {
  Rational point;
  bool left_limit;
  Rational value;
};

// A book or strong-arbitrage certificate on the interval domain. The
// book's payoff evidence lists the sample values in order; the infimum
// result carries the attainment evidence the finite world cannot express.
struct IntervalCertificate {
  Book book;
  InfResult payoff_infimum;
  std::vector<PayoffSample> samples;
};

// Book search: does some strategy have inf payoff > 0? The payoff is
// piecewise linear on the merged grid, so its infimum is the minimum of
// finitely many affine functionals of the coefficients (right endpoints
// and left limits), and the search is the usual margin-maximization LP
// over those candidates.
std::optional<IntervalCertificate> FindBookInterval(const IntervalMarket& m);

// Strong-arbitrage search: a strategy with payoff > 0 at every ω, allowing
// a non-attained infimum of 0. Decided by one LP per right-endpoint
// candidate (maximize it subject to all candidates ≥ 0), averaging the
// optimal strategies, then re-verifying strict positivity piece by piece.
std::optional<IntervalCertificate> StrongArbitrageInterval(const IntervalMarket& m);

// Where coherence and countable additivity part ways. When the market is
// coherent yet a strong arbitrage exists, every consistent pricing measure
// is forced to pile its mass onto the approach to the non-attained
// infimum, and no countably additive measure can do that. The measure is
// reported descriptively (its concentration point); charges concentrated
// at a limit point have no finite representation to return.
struct Diagnosis {
  bool coherent = false;
  std::optional<IntervalCertificate> book;  // when incoherent
  bool strong_arbitrage = false;
  std::optional<IntervalCertificate> strong_certificate;
  bool countably_additive_excluded = false;
  std::optional<Rational> mass_concentration_point;
  std::vector<std::string> notes;
};

Diagnosis DiagnoseCountableAdditivity(const IntervalMarket& m);

// Restriction to the grid {1/N, …, N/N} as a finite market. On the grid
// the minimum is attained, so strategies with positive-but-vanishing
// payoffs become honest books; comparing the two verdicts exhibits the
// finite/interval divergence.
Market Discretize(const IntervalMarket& m, int grid_size);

}  // namespace dutchbook

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

#include "dutchbook/interval.hpp"

#include <algorithm>
#include <unordered_set>

#include "dutchbook/errors.hpp"
#include "lp_support.hpp"

namespace dutchbook {

namespace {

// The merged breakpoint grid of all market gambles.
std::vector<Rational> MergedBreakpoints(const IntervalMarket& m) {
  std::vector<Rational> merged;
  for (const auto& g : m.gambles()) {
    merged.insert(merged.end(), g.breakpoints().begin(), g.breakpoints().end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

// Index of the piece of `g` containing the interval (from, to], where both
// ends are grid points refining g's breakpoints.
int ContainingPiece(const PiecewiseLinearGamble& g, const Rational& from) {
  const auto& bp = g.breakpoints();
  // Largest breakpoint ≤ from, capped to open a valid piece.
  int lo = 0;
  for (int i = 0; i + 1 < static_cast<int>(bp.size()); ++i) {
    if (bp[i] <= from) lo = i;
  }
  return lo;
}

// Margin rows for the book and strong-arbitrage LPs: for every piece of
// the merged grid, the left-limit row then the right-endpoint row. Each
// row holds π_i - f_i(·) per gamble. Sample metadata is produced
// alongside, with values filled in later.
struct CandidateRows {
  std::vector<std::vector<Rational>> margins;
  std::vector<Rational> points;
  std::vector<bool> left_limit;
  std::vector<int> right_rows;  // indices of the strict (right-endpoint) rows
};

CandidateRows BuildCandidateRows(const IntervalMarket& m) {
  const std::vector<Rational> grid = MergedBreakpoints(m);
  CandidateRows rows;
  for (size_t p = 0; p + 1 < grid.size(); ++p) {
    const Rational& from = grid[p];
    const Rational& to = grid[p + 1];

    std::vector<Rational> left_row, right_row;
    left_row.reserve(m.gamble_count());
    right_row.reserve(m.gamble_count());
    for (int i = 0; i < m.gamble_count(); ++i) {
      const PiecewiseLinearGamble& g = m.gambles()[i];
      const AffinePiece& piece = g.pieces()[ContainingPiece(g, from)];
      left_row.push_back(m.previsions()[i] - (piece.slope * from + piece.intercept));
      right_row.push_back(m.previsions()[i] - (piece.slope * to + piece.intercept));
    }
    rows.margins.push_back(std::move(left_row));
    rows.points.push_back(from);
    rows.left_limit.push_back(true);

    rows.right_rows.push_back(static_cast<int>(rows.margins.size()));
    rows.margins.push_back(std::move(right_row));
    rows.points.push_back(to);
    rows.left_limit.push_back(false);
  }
  return rows;
}

IntervalCertificate AssembleCertificate(const IntervalMarket& m,
                                        const CandidateRows& rows,
                                        const std::vector<Rational>& coefficients,
                                        Rational epsilon) {
  IntervalCertificate cert;
  for (int i = 0; i < m.gamble_count(); ++i) {
    if (coefficients[i] == 0) continue;
    cert.book.legs.push_back(BookLeg{m.gambles()[i].name(), coefficients[i]});
  }
  cert.book.epsilon = std::move(epsilon);
  cert.book.payoff_evidence = detail::MarginPayoffs(rows.margins, coefficients);
  for (size_t r = 0; r < rows.margins.size(); ++r) {
    cert.samples.push_back(PayoffSample{rows.points[r], rows.left_limit[r],
                                        cert.book.payoff_evidence[r]});
  }
  cert.payoff_infimum = ExactInf(StrategyPayoff(m, coefficients));
  return cert;
}

}  // namespace

PiecewiseLinearGamble::PiecewiseLinearGamble(std::string name,
                                             std::vector<Rational> breakpoints,
                                             std::vector<AffinePiece> pieces)
    : name_(std::move(name)),
      breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
    throw InputError("gamble '" + name_ + "': piece/breakpoint mismatch");
  }
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw InputError("gamble '" + name_ + "': domain must be exactly (0,1]");
  }
  for (size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw InputError("gamble '" + name_ + "': breakpoints must increase strictly");
    }
  }
}

PiecewiseLinearGamble PiecewiseLinearGamble::Constant(std::string name,
                                                      Rational value) {
  return PiecewiseLinearGamble(std::move(name), {Rational(0), Rational(1)},
                               {AffinePiece{Rational(0), std::move(value)}});
}

PiecewiseLinearGamble PiecewiseLinearGamble::Identity(std::string name) {
  return PiecewiseLinearGamble(std::move(name), {Rational(0), Rational(1)},
                               {AffinePiece{Rational(1), Rational(0)}});
}

Rational PiecewiseLinearGamble::ValueAt(const Rational& point) const {
  if (!(point > 0) || point > 1) {
    throw InputError("evaluation point " + FormatRational(point) +
                     " is outside (0,1]");
  }
  // Pieces are (b_i, b_{i+1}]: pick the first piece whose right end
  // reaches the point.
  for (int i = 0; i < piece_count(); ++i) {
    if (point <= breakpoints_[i + 1]) {
      return pieces_[i].slope * point + pieces_[i].intercept;
    }
  }
  throw EngineDefectError("breakpoint grid does not cover (0,1]");
}

Rational PiecewiseLinearGamble::PieceLeftLimit(int piece) const {
  return pieces_[piece].slope * breakpoints_[piece] + pieces_[piece].intercept;
}

Rational PiecewiseLinearGamble::PieceRightValue(int piece) const {
  return pieces_[piece].slope * breakpoints_[piece + 1] + pieces_[piece].intercept;
}

bool PiecewiseLinearGamble::IsConstantOne() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const AffinePiece& p) {
    return p.slope == 0 && p.intercept == 1;
  });
}

PiecewiseLinearGamble CombineAffine(
    std::string name, const Rational& constant,
    const std::vector<std::pair<const PiecewiseLinearGamble*, Rational>>& terms) {
  std::vector<Rational> merged = {Rational(0), Rational(1)};
  for (const auto& [gamble, coefficient] : terms) {
    merged.insert(merged.end(), gamble->breakpoints().begin(),
                  gamble->breakpoints().end());
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<AffinePiece> pieces;
  for (size_t p = 0; p + 1 < merged.size(); ++p) {
    AffinePiece combined{Rational(0), constant};
    for (const auto& [gamble, coefficient] : terms) {
      const AffinePiece& piece =
          gamble->pieces()[ContainingPiece(*gamble, merged[p])];
      combined.slope += coefficient * piece.slope;
      combined.intercept += coefficient * piece.intercept;
    }
    pieces.push_back(std::move(combined));
  }
  return PiecewiseLinearGamble(std::move(name), std::move(merged),
                               std::move(pieces));
}

InfResult ExactInf(const PiecewiseLinearGamble& f) {
  std::optional<InfResult> best;
  auto consider = [&best](Rational value, bool attained, Rational location) {
    if (!best.has_value() || value < best->value ||
        (value == best->value && attained && !best->attained)) {
      best = InfResult{std::move(value), attained, std::move(location)};
    }
  };
  for (int i = 0; i < f.piece_count(); ++i) {
    const Rational& slope = f.pieces()[i].slope;
    if (slope > 0) {
      // Decreasing toward the open left end: the limit is a bound that is
      // never taken inside the piece.
      consider(f.PieceLeftLimit(i), false, f.breakpoints()[i]);
    } else {
      consider(f.PieceRightValue(i), true, f.breakpoints()[i + 1]);
    }
  }
  return *best;
}

bool IsStrictlyPositive(const PiecewiseLinearGamble& f) {
  for (int i = 0; i < f.piece_count(); ++i) {
    if (!(f.PieceRightValue(i) > 0)) return false;
    if (f.PieceLeftLimit(i) < 0) return false;
  }
  return true;
}

IntervalMarket::IntervalMarket(std::vector<PiecewiseLinearGamble> gambles,
                               std::vector<Rational> previsions)
    : gambles_(std::move(gambles)), previsions_(std::move(previsions)) {
  if (gambles_.size() != previsions_.size()) {
    throw InputError("every interval gamble needs exactly one prevision");
  }
  std::unordered_set<std::string_view> names;
  bool has_unit = false;
  for (const auto& g : gambles_) {
    if (!names.insert(g.name()).second) {
      throw InputError("duplicate gamble name '" + g.name() + "'");
    }
    has_unit |= g.IsConstantOne();
  }
  if (!has_unit) {
    throw InputError("an interval market must contain the constant-one gamble");
  }
}

int IntervalMarket::IndexOf(std::string_view name) const {
  for (size_t i = 0; i < gambles_.size(); ++i) {
    if (gambles_[i].name() == name) return static_cast<int>(i);
  }
  return -1;
}

PiecewiseLinearGamble StrategyPayoff(const IntervalMarket& m,
                                     const std::vector<Rational>& coefficients) {
  if (coefficients.size() != static_cast<size_t>(m.gamble_count())) {
    throw InputError("strategy has " + std::to_string(coefficients.size()) +
                     " coefficients for " + std::to_string(m.gamble_count()) +
                     " gambles");
  }
  Rational constant = 0;
  std::vector<std::pair<const PiecewiseLinearGamble*, Rational>> terms;
  for (int i = 0; i < m.gamble_count(); ++i) {
    constant += coefficients[i] * m.previsions()[i];
    terms.emplace_back(&m.gambles()[i], -coefficients[i]);
  }
  return CombineAffine("payoff", constant, terms);
}

std::optional<IntervalCertificate> FindBookInterval(const IntervalMarket& m) {
  const CandidateRows rows = BuildCandidateRows(m);
  auto search = detail::MaximizeUniformMargin(rows.margins);
  if (!search.has_value()) return std::nullopt;

  IntervalCertificate cert =
      AssembleCertificate(m, rows, search->coefficients, search->epsilon);
  if (cert.payoff_infimum.value != search->epsilon) {
    throw EngineDefectError("book margin does not match the exact infimum");
  }
  return cert;
}

std::optional<IntervalCertificate> StrongArbitrageInterval(
    const IntervalMarket& m) {
  const CandidateRows rows = BuildCandidateRows(m);
  const int row_count = static_cast<int>(rows.margins.size());
  std::vector<int> all_rows(row_count);
  for (int r = 0; r < row_count; ++r) all_rows[r] = r;

  // Every right-endpoint value must be forcible above zero while keeping
  // the whole payoff nonnegative; left limits only need nonnegativity.
  std::vector<Rational> combined(m.gamble_count(), Rational(0));
  const int strict_count = static_cast<int>(rows.right_rows.size());
  for (int r : rows.right_rows) {
    std::vector<Rational> weights(row_count, Rational(0));
    weights[r] = 1;
    auto search = detail::MaximizeWeightedPayoff(rows.margins, weights, all_rows);
    if (search.value <= 0) return std::nullopt;
    for (int i = 0; i < m.gamble_count(); ++i) {
      combined[i] += search.coefficients[i] / strict_count;
    }
  }

  const PiecewiseLinearGamble payoff = StrategyPayoff(m, combined);
  if (!IsStrictlyPositive(payoff)) {
    throw EngineDefectError("combined interval strategy lost strict positivity");
  }

  InfResult inf = ExactInf(payoff);
  const Rational epsilon = inf.value > 0 ? inf.value : Rational(0);
  IntervalCertificate cert = AssembleCertificate(m, rows, combined, epsilon);
  return cert;
}

Diagnosis DiagnoseCountableAdditivity(const IntervalMarket& m) {
  Diagnosis d;
  if (auto book = FindBookInterval(m); book.has_value()) {
    d.coherent = false;
    d.book = std::move(book);
    d.notes.push_back("market is incoherent (a book exists); diagnosis stops");
    return d;
  }
  d.coherent = true;

  auto strong = StrongArbitrageInterval(m);
  if (!strong.has_value()) {
    d.strong_arbitrage = false;
    d.notes.push_back(
        "coherent with no strong arbitrage; countably additive pricing "
        "measures are not ruled out");
    return d;
  }

  d.strong_arbitrage = true;
  d.countably_additive_excluded = true;
  d.mass_concentration_point = strong->payoff_infimum.location;
  d.notes.push_back(
      "coherent, yet a strategy pays strictly positive everywhere with "
      "non-attained infimum 0 near ω = " +
      FormatRational(strong->payoff_infimum.location) +
      "; every consistent pricing measure gives mass 1 to each neighborhood "
      "of that point, so none is countably additive");
  d.strong_certificate = std::move(strong);
  return d;
}

Market Discretize(const IntervalMarket& m, int grid_size) {
  if (grid_size < 1) {
    throw InputError("grid size must be at least 1");
  }
  std::vector<std::string> labels;
  labels.reserve(grid_size);
  for (int j = 1; j <= grid_size; ++j) {
    labels.push_back(FormatRational(Rational(j, grid_size)));
  }
  ScenarioSpace space(std::move(labels));

  std::vector<Gamble> gambles;
  std::vector<Rational> previsions(m.previsions());
  for (const auto& g : m.gambles()) {
    std::vector<Rational> payoffs;
    payoffs.reserve(grid_size);
    for (int j = 1; j <= grid_size; ++j) {
      payoffs.push_back(g.ValueAt(Rational(j, grid_size)));
    }
    gambles.push_back(Gamble{g.name(), std::move(payoffs)});
  }
  return Market(std::move(space), std::move(gambles), std::move(previsions));
}

}  // namespace dutchbook

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
// Exact rational linear programming with verifiable certificates. This is
// the computational substrate for every coherence, arbitrage and hedging
// question in the engine: a dense two-phase primal simplex with Bland's
// anti-cycling rule over arbitrary-precision rationals. No floating-point
// phase, no tolerances, tiny problems only.

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dutchbook/rational.hpp"

namespace dutchbook {

enum class Sense { kMaximize, kMinimize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

// Optional per-variable bounds; variables are free by default.
struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

class LinearProgram {
 public:
  LinearProgram(Sense sense, std::vector<Rational> objective);

  // Throws InputError when the row width does not match the objective.
  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs);
  void SetLowerBound(int variable, Rational bound);
  void SetUpperBound(int variable, Rational bound);

  Sense sense() const { return sense_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<VariableBounds>& bounds() const { return bounds_; }
  int variable_count() const { return static_cast<int>(objective_.size()); }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }

  Rational ObjectiveValue(const std::vector<Rational>& point) const;

 private:
  Sense sense_;
  std::vector<Rational> objective_;
  std::vector<LinearConstraint> constraints_;
  std::vector<VariableBounds> bounds_;
};

// Every certificate refers to the ≤-normalized row system A·x ≤ b obtained
// from a program as follows, in this order:
//   * each constraint in input order: a ≤ row stays, a ≥ row is negated,
//     an = row expands into its ≤ row followed by its negated ≥ row;
//   * then per variable in index order: lower bound x_j ≥ l as -x_j ≤ -l,
//     upper bound x_j ≤ u as-is.
struct NormalizedRows {
  std::vector<std::vector<Rational>> coefficients;
  std::vector<Rational> rhs;
  int row_count() const { return static_cast<int>(rhs.size()); }
};

NormalizedRows NormalizeRows(const LinearProgram& lp);

// value, point and multipliers certifying optimality: `dual` is indexed by
// normalized rows, is nonnegative, satisfies Aᵀ·dual = σ·objective and
// b·dual = σ·value, where σ is +1 for maximization and -1 for minimization.
// Complementary slackness then holds exactly.
struct OptimalOutcome {
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

// A feasible point plus an improving ray: A·ray ≤ 0 on every normalized
// row and the (sense-adjusted) objective strictly improves along it.
struct UnboundedOutcome {
  std::vector<Rational> ray;
  std::vector<Rational> feasible_point;
};

// Nonnegative multipliers on the normalized rows combining them into the
// contradiction 0 ≤ -1: Aᵀ·farkas = 0 and b·farkas = -1 exactly.
struct InfeasibleOutcome {
  std::vector<Rational> farkas;
};

using LPOutcome = std::variant<OptimalOutcome, UnboundedOutcome, InfeasibleOutcome>;

// Two-phase simplex with Bland's rule and fixed tie-breaking: two solves
// of the same program return identical outcomes bit-for-bit. Throws
// InputError on malformed dimensions only; arithmetic cannot overflow.
LPOutcome Solve(const LinearProgram& lp);

// True iff the outcome's certificate satisfies its variant's invariant
// exactly. Used as a self-check after every solve.
bool VerifyCertificate(const LinearProgram& lp, const LPOutcome& outcome);

}  // namespace dutchbook

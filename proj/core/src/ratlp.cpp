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

#include "dutchbook/ratlp.hpp"

#include <algorithm>
#include <cstddef>

#include "dutchbook/errors.hpp"

namespace dutchbook {

LinearProgram::LinearProgram(Sense sense, std::vector<Rational> objective)
    : sense_(sense), objective_(std::move(objective)) {
  if (objective_.empty()) {
    throw InputError("a linear program needs at least one variable");
  }
  bounds_.resize(objective_.size());
}

void LinearProgram::AddConstraint(std::vector<Rational> coefficients,
                                  Relation relation, Rational rhs) {
  if (coefficients.size() != objective_.size()) {
    throw InputError("constraint width " + std::to_string(coefficients.size()) +
                     " does not match " + std::to_string(objective_.size()) +
                     " variables");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::SetLowerBound(int variable, Rational bound) {
  if (variable < 0 || variable >= variable_count()) {
    throw InputError("bound on out-of-range variable " + std::to_string(variable));
  }
  bounds_[variable].lower = std::move(bound);
}

void LinearProgram::SetUpperBound(int variable, Rational bound) {
  if (variable < 0 || variable >= variable_count()) {
    throw InputError("bound on out-of-range variable " + std::to_string(variable));
  }
  bounds_[variable].upper = std::move(bound);
}

Rational LinearProgram::ObjectiveValue(const std::vector<Rational>& point) const {
  if (point.size() != objective_.size()) {
    throw InputError("objective evaluation dimension mismatch");
  }
  Rational value = 0;
  for (size_t j = 0; j < point.size(); ++j) value += objective_[j] * point[j];
  return value;
}

NormalizedRows NormalizeRows(const LinearProgram& lp) {
  const int n = lp.variable_count();
  NormalizedRows sys;
  auto add_row = [&](const std::vector<Rational>& coeffs, const Rational& rhs,
                     bool negate) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = negate ? -coeffs[j] : coeffs[j];
    sys.coefficients.push_back(std::move(row));
    sys.rhs.push_back(negate ? -rhs : rhs);
  };
  for (const LinearConstraint& c : lp.constraints()) {
    switch (c.relation) {
      case Relation::kLessEqual:
        add_row(c.coefficients, c.rhs, false);
        break;
      case Relation::kGreaterEqual:
        add_row(c.coefficients, c.rhs, true);
        break;
      case Relation::kEqual:
        add_row(c.coefficients, c.rhs, false);
        add_row(c.coefficients, c.rhs, true);
        break;
    }
  }
  for (int j = 0; j < n; ++j) {
    const VariableBounds& b = lp.bounds()[j];
    if (b.lower.has_value()) {
      std::vector<Rational> row(n);
      row[j] = -1;
      sys.coefficients.push_back(std::move(row));
      sys.rhs.push_back(-*b.lower);
    }
    if (b.upper.has_value()) {
      std::vector<Rational> row(n);
      row[j] = 1;
      sys.coefficients.push_back(std::move(row));
      sys.rhs.push_back(*b.upper);
    }
  }
  return sys;
}

namespace {

// Preprocessing into "maximize c'·x̂ subject to A'·x̂ ≤ b', x̂ ≥ 0" with an
// exact recovery map back to the original variables and to the multipliers
// of the spec's normalized row system:
//   * lower-bounded variables are shifted, x = x̂ + l;
//   * upper-bounded-only variables are reflected, x = u - x̂;
//   * two-sided variables are shifted and keep a structural row for the
//     upper bound;
//   * free variables split into a difference of two columns.
// Duals of bound rows are recovered from the reduced costs of the variable
// columns, duals of structural rows from the slack reduced costs.
struct StandardForm {
  enum class VarKind { kFree, kShiftLower, kReflectUpper };
  struct VarMap {
    VarKind kind;
    int col0 = -1;
    int col1 = -1;     // second column of a free split
    Rational shift;    // l for shifts, u for reflections
  };

  std::vector<std::vector<Rational>> rows;  // structural rows, width = cols
  std::vector<Rational> rhs;
  std::vector<Rational> objective;          // maximize, width = cols
  Rational objective_offset = 0;
  int cols = 0;

  std::vector<VarMap> vars;
  std::vector<int> row_to_normalized;       // structural row -> normalized row
  std::vector<int> lower_row, upper_row;    // per var, -1 when absent

  int normalized_count = 0;
};

StandardForm BuildStandardForm(const LinearProgram& lp) {
  const int n = lp.variable_count();
  StandardForm sf;
  sf.vars.resize(n);
  sf.lower_row.assign(n, -1);
  sf.upper_row.assign(n, -1);

  // Normalized-row indices follow NormalizeRows: constraints first (equal
  // rows expand to two), then bounds per variable.
  int normalized = 0;
  std::vector<int> constraint_rows;  // normalized index of each ≤-image
  for (const LinearConstraint& c : lp.constraints()) {
    constraint_rows.push_back(normalized);
    normalized += c.relation == Relation::kEqual ? 2 : 1;
  }
  for (int j = 0; j < n; ++j) {
    if (lp.bounds()[j].lower.has_value()) sf.lower_row[j] = normalized++;
    if (lp.bounds()[j].upper.has_value()) sf.upper_row[j] = normalized++;
  }
  sf.normalized_count = normalized;

  // Column layout and the variable transform.
  for (int j = 0; j < n; ++j) {
    const VariableBounds& b = lp.bounds()[j];
    StandardForm::VarMap& var = sf.vars[j];
    if (b.lower.has_value()) {
      var.kind = StandardForm::VarKind::kShiftLower;
      var.shift = *b.lower;
      var.col0 = sf.cols++;
    } else if (b.upper.has_value()) {
      var.kind = StandardForm::VarKind::kReflectUpper;
      var.shift = *b.upper;
      var.col0 = sf.cols++;
    } else {
      var.kind = StandardForm::VarKind::kFree;
      var.col0 = sf.cols++;
      var.col1 = sf.cols++;
    }
  }

  const Rational sigma = lp.sense() == Sense::kMaximize ? 1 : -1;
  sf.objective.assign(sf.cols, Rational(0));
  for (int j = 0; j < n; ++j) {
    const Rational c = sigma * lp.objective()[j];
    const StandardForm::VarMap& var = sf.vars[j];
    switch (var.kind) {
      case StandardForm::VarKind::kFree:
        sf.objective[var.col0] = c;
        sf.objective[var.col1] = -c;
        break;
      case StandardForm::VarKind::kShiftLower:
        sf.objective[var.col0] = c;
        sf.objective_offset += c * var.shift;
        break;
      case StandardForm::VarKind::kReflectUpper:
        sf.objective[var.col0] = -c;
        sf.objective_offset += c * var.shift;
        break;
    }
  }

  // One structural ≤ row in x̂-space from a row functional a·x ≤ rhs.
  auto add_structural = [&](const std::vector<Rational>& a, const Rational& rhs,
                            bool negate, int normalized_index) {
    std::vector<Rational> row(sf.cols, Rational(0));
    Rational adjusted = negate ? -rhs : rhs;
    for (int j = 0; j < n; ++j) {
      Rational coeff = negate ? -a[j] : a[j];
      if (coeff == 0) continue;
      const StandardForm::VarMap& var = sf.vars[j];
      switch (var.kind) {
        case StandardForm::VarKind::kFree:
          row[var.col0] = coeff;
          row[var.col1] = -coeff;
          break;
        case StandardForm::VarKind::kShiftLower:
          row[var.col0] = coeff;
          adjusted -= coeff * var.shift;
          break;
        case StandardForm::VarKind::kReflectUpper:
          row[var.col0] = -coeff;
          adjusted -= coeff * var.shift;
          break;
      }
    }
    sf.rows.push_back(std::move(row));
    sf.rhs.push_back(std::move(adjusted));
    sf.row_to_normalized.push_back(normalized_index);
  };

  for (size_t i = 0; i < lp.constraints().size(); ++i) {
    const LinearConstraint& c = lp.constraints()[i];
    const int base = constraint_rows[i];
    switch (c.relation) {
      case Relation::kLessEqual:
        add_structural(c.coefficients, c.rhs, false, base);
        break;
      case Relation::kGreaterEqual:
        add_structural(c.coefficients, c.rhs, true, base);
        break;
      case Relation::kEqual:
        add_structural(c.coefficients, c.rhs, false, base);
        add_structural(c.coefficients, c.rhs, true, base + 1);
        break;
    }
  }
  // Upper bounds of two-sided variables become structural rows tied to
  // their normalized upper-bound row.
  for (int j = 0; j < n; ++j) {
    const VariableBounds& b = lp.bounds()[j];
    if (b.lower.has_value() && b.upper.has_value()) {
      std::vector<Rational> a(n, Rational(0));
      a[j] = 1;
      add_structural(a, *b.upper, false, sf.upper_row[j]);
    }
  }
  return sf;
}

// Dense simplex tableau over [A' | slacks | artificials]·z = b̂ with b̂ ≥ 0.
class Tableau {
 public:
  explicit Tableau(const StandardForm& sf)
      : var_cols_(sf.cols), m_(static_cast<int>(sf.rows.size())) {
    real_cols_ = var_cols_ + m_;
    rows_.assign(m_, std::vector<Rational>(real_cols_, Rational(0)));
    rhs_.assign(m_, Rational(0));
    basis_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const bool flip = sf.rhs[i] < 0;
      const Rational sign = flip ? -1 : 1;
      for (int j = 0; j < var_cols_; ++j) rows_[i][j] = sign * sf.rows[i][j];
      rows_[i][var_cols_ + i] = sign;
      rhs_[i] = sign * sf.rhs[i];
      if (flip) {
        artificial_rows_.push_back(i);
      } else {
        basis_[i] = var_cols_ + i;
      }
    }
    for (size_t a = 0; a < artificial_rows_.size(); ++a) {
      const int row = artificial_rows_[a];
      for (int i = 0; i < m_; ++i) rows_[i].push_back(i == row ? 1 : 0);
      basis_[row] = real_cols_ + static_cast<int>(a);
    }
    cols_ = real_cols_ + static_cast<int>(artificial_rows_.size());
  }

  bool needs_phase_one() const { return !artificial_rows_.empty(); }

  void PriceOut(const std::vector<Rational>& costs) {
    reduced_.assign(cols_, Rational(0));
    objective_value_ = 0;
    for (int j = 0; j < cols_; ++j) reduced_[j] = -costs[j];
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols_; ++j) reduced_[j] += cb * rows_[i][j];
      objective_value_ += cb * rhs_[i];
    }
  }

  enum class Status { kOptimal, kUnbounded };

  // Bland's rule: entering = lowest-index column with negative reduced
  // cost; leaving = minimum ratio, ties broken by lowest basic variable
  // index. Deterministic and cycle-free.
  Status RunSimplex(int* unbounded_col) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols_; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return Status::kOptimal;

      int leaving = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        if (unbounded_col != nullptr) *unbounded_col = entering;
        return Status::kUnbounded;
      }
      Pivot(leaving, entering);
    }
  }

  void Pivot(int row, int col) {
    const Rational pivot = rows_[row][col];
    for (int j = 0; j < cols_; ++j) rows_[row][j] /= pivot;
    rhs_[row] /= pivot;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      const Rational factor = rows_[i][col];
      if (factor == 0) continue;
      for (int j = 0; j < cols_; ++j) rows_[i][j] -= factor * rows_[row][j];
      rhs_[i] -= factor * rhs_[row];
    }
    const Rational rfactor = reduced_[col];
    if (rfactor != 0) {
      for (int j = 0; j < cols_; ++j) reduced_[j] -= rfactor * rows_[row][j];
      objective_value_ -= rfactor * rhs_[row];
    }
    basis_[row] = col;
  }

  // After a zero-value phase one: pivot every basic artificial out through
  // a degenerate pivot on a real column. One always exists because the
  // slack block keeps the row system full-rank.
  void RemoveArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < real_cols_) continue;
      int pivot_col = -1;
      for (int j = 0; j < real_cols_; ++j) {
        if (rows_[i][j] != 0) {
          pivot_col = j;
          break;
        }
      }
      if (pivot_col < 0) {
        throw EngineDefectError("zero tableau row despite full-rank slack block");
      }
      Pivot(i, pivot_col);
    }
    for (auto& row : rows_) row.resize(real_cols_);
    cols_ = real_cols_;
  }

  std::vector<Rational> PhaseOneCosts() const {
    std::vector<Rational> costs(cols_, Rational(0));
    for (int j = real_cols_; j < cols_; ++j) costs[j] = -1;
    return costs;
  }

  std::vector<Rational> PhaseTwoCosts(const StandardForm& sf) const {
    std::vector<Rational> costs(cols_, Rational(0));
    for (int j = 0; j < var_cols_; ++j) costs[j] = sf.objective[j];
    return costs;
  }

  std::vector<Rational> ColumnValues() const {
    std::vector<Rational> z(cols_, Rational(0));
    for (int i = 0; i < m_; ++i) z[basis_[i]] = rhs_[i];
    return z;
  }

  std::vector<Rational> ColumnRay(int entering) const {
    std::vector<Rational> z(cols_, Rational(0));
    z[entering] = 1;
    for (int i = 0; i < m_; ++i) z[basis_[i]] = -rows_[i][entering];
    return z;
  }

  const Rational& reduced_cost(int col) const { return reduced_[col]; }
  int slack_col(int structural_row) const { return var_cols_ + structural_row; }
  const Rational& objective_value() const { return objective_value_; }

 private:
  int var_cols_;
  int m_;
  int real_cols_;
  int cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<int> artificial_rows_;
  std::vector<Rational> reduced_;
  Rational objective_value_ = 0;
};

std::vector<Rational> RecoverPoint(const StandardForm& sf,
                                   const std::vector<Rational>& z) {
  std::vector<Rational> x(sf.vars.size());
  for (size_t j = 0; j < sf.vars.size(); ++j) {
    const StandardForm::VarMap& var = sf.vars[j];
    switch (var.kind) {
      case StandardForm::VarKind::kFree:
        x[j] = z[var.col0] - z[var.col1];
        break;
      case StandardForm::VarKind::kShiftLower:
        x[j] = z[var.col0] + var.shift;
        break;
      case StandardForm::VarKind::kReflectUpper:
        x[j] = var.shift - z[var.col0];
        break;
    }
  }
  return x;
}

std::vector<Rational> RecoverDirection(const StandardForm& sf,
                                       const std::vector<Rational>& z) {
  std::vector<Rational> r(sf.vars.size());
  for (size_t j = 0; j < sf.vars.size(); ++j) {
    const StandardForm::VarMap& var = sf.vars[j];
    switch (var.kind) {
      case StandardForm::VarKind::kFree:
        r[j] = z[var.col0] - z[var.col1];
        break;
      case StandardForm::VarKind::kShiftLower:
        r[j] = z[var.col0];
        break;
      case StandardForm::VarKind::kReflectUpper:
        r[j] = -z[var.col0];
        break;
    }
  }
  return r;
}

// Multipliers for the full normalized row system: structural rows from the
// slack reduced costs, bound rows from the variable-column reduced costs.
std::vector<Rational> RecoverMultipliers(const StandardForm& sf,
                                         const Tableau& tableau) {
  std::vector<Rational> y(sf.normalized_count, Rational(0));
  for (size_t i = 0; i < sf.rows.size(); ++i) {
    y[sf.row_to_normalized[i]] = tableau.reduced_cost(tableau.slack_col(i));
  }
  for (size_t j = 0; j < sf.vars.size(); ++j) {
    const StandardForm::VarMap& var = sf.vars[j];
    switch (var.kind) {
      case StandardForm::VarKind::kFree:
        break;
      case StandardForm::VarKind::kShiftLower:
        y[sf.lower_row[j]] = tableau.reduced_cost(var.col0);
        break;
      case StandardForm::VarKind::kReflectUpper:
        y[sf.upper_row[j]] = tableau.reduced_cost(var.col0);
        break;
    }
  }
  return y;
}

}  // namespace

LPOutcome Solve(const LinearProgram& lp) {
  const StandardForm sf = BuildStandardForm(lp);
  Tableau tableau(sf);

  if (tableau.needs_phase_one()) {
    tableau.PriceOut(tableau.PhaseOneCosts());
    if (tableau.RunSimplex(nullptr) == Tableau::Status::kUnbounded) {
      throw EngineDefectError("phase one cannot be unbounded");
    }
    if (tableau.objective_value() < 0) {
      // Infeasible: the reduced costs combine the rows into 0 ≤ (negative);
      // scale the contradiction to 0 ≤ -1.
      std::vector<Rational> farkas = RecoverMultipliers(sf, tableau);
      const NormalizedRows sys = NormalizeRows(lp);
      Rational rhs_value = 0;
      for (int i = 0; i < sys.row_count(); ++i) rhs_value += farkas[i] * sys.rhs[i];
      for (Rational& f : farkas) f /= -rhs_value;
      return InfeasibleOutcome{std::move(farkas)};
    }
    tableau.RemoveArtificials();
  }

  tableau.PriceOut(tableau.PhaseTwoCosts(sf));
  int unbounded_col = -1;
  if (tableau.RunSimplex(&unbounded_col) == Tableau::Status::kUnbounded) {
    return UnboundedOutcome{RecoverDirection(sf, tableau.ColumnRay(unbounded_col)),
                            RecoverPoint(sf, tableau.ColumnValues())};
  }

  Rational value = tableau.objective_value() + sf.objective_offset;
  if (lp.sense() == Sense::kMinimize) value = -value;
  return OptimalOutcome{std::move(value), RecoverPoint(sf, tableau.ColumnValues()),
                        RecoverMultipliers(sf, tableau)};
}

namespace {

Rational RowDot(const std::vector<Rational>& row, const std::vector<Rational>& x) {
  Rational out = 0;
  for (size_t j = 0; j < row.size(); ++j) out += row[j] * x[j];
  return out;
}

bool PointFeasible(const NormalizedRows& sys, const std::vector<Rational>& x) {
  for (int i = 0; i < sys.row_count(); ++i) {
    if (RowDot(sys.coefficients[i], x) > sys.rhs[i]) return false;
  }
  return true;
}

}  // namespace

bool VerifyCertificate(const LinearProgram& lp, const LPOutcome& outcome) {
  const NormalizedRows sys = NormalizeRows(lp);
  const int n = lp.variable_count();
  const int m = sys.row_count();
  const Rational sigma = lp.sense() == Sense::kMaximize ? 1 : -1;

  if (const auto* opt = std::get_if<OptimalOutcome>(&outcome)) {
    if (static_cast<int>(opt->primal.size()) != n) return false;
    if (static_cast<int>(opt->dual.size()) != m) return false;
    if (!PointFeasible(sys, opt->primal)) return false;
    if (lp.ObjectiveValue(opt->primal) != opt->value) return false;
    for (const Rational& y : opt->dual) {
      if (y < 0) return false;
    }
    // Aᵀy = σc, exactly.
    for (int j = 0; j < n; ++j) {
      Rational lhs = 0;
      for (int i = 0; i < m; ++i) lhs += opt->dual[i] * sys.coefficients[i][j];
      if (lhs != sigma * lp.objective()[j]) return false;
    }
    // b·y = σ·value; with primal feasibility this forces exact
    // complementary slackness, which is checked as well.
    Rational dual_value = 0;
    for (int i = 0; i < m; ++i) dual_value += opt->dual[i] * sys.rhs[i];
    if (dual_value != sigma * opt->value) return false;
    Rational slack_product = 0;
    for (int i = 0; i < m; ++i) {
      slack_product +=
          opt->dual[i] * (sys.rhs[i] - RowDot(sys.coefficients[i], opt->primal));
    }
    return slack_product == 0;
  }

  if (const auto* unb = std::get_if<UnboundedOutcome>(&outcome)) {
    if (static_cast<int>(unb->ray.size()) != n) return false;
    if (static_cast<int>(unb->feasible_point.size()) != n) return false;
    if (!PointFeasible(sys, unb->feasible_point)) return false;
    for (int i = 0; i < m; ++i) {
      if (RowDot(sys.coefficients[i], unb->ray) > 0) return false;
    }
    return sigma * lp.ObjectiveValue(unb->ray) > 0;
  }

  const auto& inf = std::get<InfeasibleOutcome>(outcome);
  if (static_cast<int>(inf.farkas.size()) != m) return false;
  for (const Rational& y : inf.farkas) {
    if (y < 0) return false;
  }
  for (int j = 0; j < n; ++j) {
    Rational lhs = 0;
    for (int i = 0; i < m; ++i) lhs += inf.farkas[i] * sys.coefficients[i][j];
    if (lhs != 0) return false;
  }
  Rational rhs_value = 0;
  for (int i = 0; i < m; ++i) rhs_value += inf.farkas[i] * sys.rhs[i];
  return rhs_value < 0;
}

}  // namespace dutchbook

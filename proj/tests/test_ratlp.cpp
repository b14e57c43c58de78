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

#include <doctest.h>

#include "dutchbook/errors.hpp"
#include "support/generators.hpp"
#include "support/lp_oracle.hpp"

using namespace dutchbook;
namespace dbt = dutchbook::testing;

namespace {

bool SameOutcome(const LPOutcome& a, const LPOutcome& b) {
  if (a.index() != b.index()) return false;
  if (const auto* oa = std::get_if<OptimalOutcome>(&a)) {
    const auto& ob = std::get<OptimalOutcome>(b);
    return oa->value == ob.value && oa->primal == ob.primal && oa->dual == ob.dual;
  }
  if (const auto* ua = std::get_if<UnboundedOutcome>(&a)) {
    const auto& ub = std::get<UnboundedOutcome>(b);
    return ua->ray == ub.ray && ua->feasible_point == ub.feasible_point;
  }
  return std::get<InfeasibleOutcome>(a).farkas ==
         std::get<InfeasibleOutcome>(b).farkas;
}

}  // namespace

TEST_CASE("single bound: max x subject to x <= 3") {
  LinearProgram lp(Sense::kMaximize, {Rational(1)});
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(3));
  auto out = Solve(lp);
  const auto* opt = std::get_if<OptimalOutcome>(&out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == 3);
  CHECK(opt->primal == std::vector<Rational>{Rational(3)});
  CHECK(VerifyCertificate(lp, out));
}

TEST_CASE("contradictory bounds produce a Farkas certificate") {
  LinearProgram lp(Sense::kMaximize, {Rational(1)});
  lp.AddConstraint({Rational(1)}, Relation::kGreaterEqual, Rational(1));
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(0));
  auto out = Solve(lp);
  const auto* inf = std::get_if<InfeasibleOutcome>(&out);
  REQUIRE(inf != nullptr);
  CHECK(VerifyCertificate(lp, out));

  // The combination cancels the coefficients and leaves 0 <= -1 exactly.
  const NormalizedRows sys = NormalizeRows(lp);
  Rational coeff = 0, rhs = 0;
  for (int i = 0; i < sys.row_count(); ++i) {
    coeff += inf->farkas[i] * sys.coefficients[i][0];
    rhs += inf->farkas[i] * sys.rhs[i];
  }
  CHECK(coeff == 0);
  CHECK(rhs == -1);
}

TEST_CASE("polytope maximum matches the vertex-enumeration value") {
  LinearProgram lp(Sense::kMaximize, {Rational(1), Rational(1)});
  lp.AddConstraint({Rational(1), Rational(1)}, Relation::kLessEqual, Rational(7, 3));
  lp.AddConstraint({Rational(1), Rational(0)}, Relation::kLessEqual, Rational(2));
  lp.AddConstraint({Rational(0), Rational(1)}, Relation::kLessEqual, Rational(2));
  lp.SetLowerBound(0, Rational(0));
  lp.SetLowerBound(1, Rational(0));

  auto oracle = dbt::BruteForceSolve(lp);
  REQUIRE(oracle.kind == dbt::OracleKind::kOptimal);
  CHECK(oracle.value == Rational(7, 3));

  auto out = Solve(lp);
  const auto* opt = std::get_if<OptimalOutcome>(&out);
  REQUIRE(opt != nullptr);
  CHECK(opt->value == Rational(7, 3));
  CHECK(VerifyCertificate(lp, out));
}

TEST_CASE("verify_certificate rejects corrupted certificates") {
  LinearProgram lp(Sense::kMaximize, {Rational(1)});
  lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(3));

  auto out = Solve(lp);
  auto& opt = std::get<OptimalOutcome>(out);
  SUBCASE("primal violating a constraint") {
    opt.primal[0] = 4;
    opt.value = 4;
    CHECK_FALSE(VerifyCertificate(lp, out));
  }
  SUBCASE("value not matching the primal") {
    opt.value += 1;
    CHECK_FALSE(VerifyCertificate(lp, out));
  }
  SUBCASE("negative dual weight") {
    opt.dual[0] = -1;
    CHECK_FALSE(VerifyCertificate(lp, out));
  }
}

TEST_CASE("unbounded programs come with an improving feasible ray") {
  LinearProgram lp(Sense::kMinimize, {Rational(1), Rational(0)});
  lp.AddConstraint({Rational(1), Rational(1)}, Relation::kLessEqual, Rational(4));
  auto out = Solve(lp);
  REQUIRE(std::holds_alternative<UnboundedOutcome>(out));
  CHECK(VerifyCertificate(lp, out));
}

TEST_CASE("malformed dimensions are input errors") {
  LinearProgram lp(Sense::kMaximize, {Rational(1), Rational(2)});
  CHECK_THROWS_AS(lp.AddConstraint({Rational(1)}, Relation::kLessEqual, Rational(0)),
                  InputError);
  CHECK_THROWS_AS(lp.SetLowerBound(2, Rational(0)), InputError);
  CHECK_THROWS_AS(LinearProgram(Sense::kMaximize, {}), InputError);
}

TEST_CASE("determinism: identical programs solve to identical outcomes") {
  dbt::Rng rng(99);
  for (int it = 0; it < 50; ++it) {
    LinearProgram lp = dbt::RandomSmallLP(rng);
    CHECK(SameOutcome(Solve(lp), Solve(lp)));
  }
}

TEST_CASE("randomized programs: certificates verify and agree with brute force") {
  dbt::Rng rng(123);
  int optimal = 0, unbounded = 0, infeasible = 0;
  for (int it = 0; it < 300; ++it) {
    LinearProgram lp = dbt::RandomSmallLP(rng);
    auto out = Solve(lp);
    CHECK(VerifyCertificate(lp, out));

    auto oracle = dbt::BruteForceSolve(lp);
    if (const auto* opt = std::get_if<OptimalOutcome>(&out)) {
      ++optimal;
      REQUIRE(oracle.kind == dbt::OracleKind::kOptimal);
      CHECK(oracle.value == opt->value);
    } else if (std::holds_alternative<UnboundedOutcome>(out)) {
      ++unbounded;
      CHECK(oracle.kind == dbt::OracleKind::kUnbounded);
    } else {
      ++infeasible;
      CHECK(oracle.kind == dbt::OracleKind::kInfeasible);
    }
  }
  // The generator must exercise all three outcome kinds.
  CHECK(optimal > 20);
  CHECK(unbounded > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("strong duality holds exactly on optimal outcomes") {
  dbt::Rng rng(321);
  for (int it = 0; it < 200; ++it) {
    LinearProgram lp = dbt::RandomSmallLP(rng);
    auto out = Solve(lp);
    const auto* opt = std::get_if<OptimalOutcome>(&out);
    if (opt == nullptr) continue;
    const NormalizedRows sys = NormalizeRows(lp);
    Rational dual_value = 0;
    for (int i = 0; i < sys.row_count(); ++i) {
      dual_value += opt->dual[i] * sys.rhs[i];
    }
    const Rational sigma = lp.sense() == Sense::kMaximize ? 1 : -1;
    CHECK(dual_value == sigma * opt->value);
  }
}

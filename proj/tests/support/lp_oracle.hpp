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
// Brute-force LP oracle for the test suites: enumerate vertices of the
// boxed feasible polytope by solving every square subsystem exactly, and
// decide unboundedness from the vertices of the boxed recession cone. It
// shares nothing with the simplex path it checks — it rebuilds its own
// row system and does its own Gaussian elimination.

#pragma once

#include "dutchbook/ratlp.hpp"

namespace dutchbook::testing {

enum class OracleKind { kInfeasible, kUnbounded, kOptimal };

struct OracleResult {
  OracleKind kind;
  Rational value;  // meaningful for kOptimal
};

// Intended for small programs only (≤ 4 variables, small integer data);
// the subset enumeration is exponential by design.
OracleResult BruteForceSolve(const LinearProgram& lp);

}  // namespace dutchbook::testing

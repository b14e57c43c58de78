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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace dutchbook {

// Every scalar in the engine is an exact rational. Coherence verdicts,
// duality gaps and certificate margins are exact equalities and strict
// inequalities; there is no floating-point path anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p/q" fractions ("3/4", "-7/2"), integers ("12") and finite
// decimals ("0.125", "-3.5"), all converted exactly. Throws InputError on
// anything else, including zero denominators.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q", or plain "p" when the denominator is one.
std::string FormatRational(const Rational& value);

std::string FormatRationalVector(const std::vector<Rational>& values);

}  // namespace dutchbook

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

#include "dutchbook/rational.hpp"

#include <doctest.h>

#include "dutchbook/errors.hpp"

using namespace dutchbook;

TEST_CASE("fractions, integers and finite decimals parse exactly") {
  CHECK(ParseRational("3/4") == Rational(3, 4));
  CHECK(ParseRational("-7/2") == Rational(-7, 2));
  CHECK(ParseRational("+5") == Rational(5));
  CHECK(ParseRational("0") == Rational(0));
  CHECK(ParseRational("0.125") == Rational(1, 8));
  CHECK(ParseRational("-3.5") == Rational(-7, 2));
  CHECK(ParseRational("1.10") == Rational(11, 10));
  CHECK(ParseRational(".5") == Rational(1, 2));
  CHECK(ParseRational("2.") == Rational(2));
}

TEST_CASE("malformed numbers are rejected") {
  CHECK_THROWS_AS(ParseRational(""), InputError);
  CHECK_THROWS_AS(ParseRational("1/0"), InputError);
  CHECK_THROWS_AS(ParseRational("a/b"), InputError);
  CHECK_THROWS_AS(ParseRational("1e3"), InputError);
  CHECK_THROWS_AS(ParseRational("1.2.3"), InputError);
  CHECK_THROWS_AS(ParseRational("."), InputError);
  CHECK_THROWS_AS(ParseRational("--2"), InputError);
  CHECK_THROWS_AS(ParseRational("1 / 2"), InputError);
}

TEST_CASE("canonical formatting") {
  CHECK(FormatRational(Rational(3, 4)) == "3/4");
  CHECK(FormatRational(Rational(-6, 8)) == "-3/4");
  CHECK(FormatRational(Rational(5)) == "5");
  CHECK(FormatRational(Rational(0)) == "0");
  CHECK(FormatRational(ParseRational("0.25")) == "1/4");
}

TEST_CASE("format/parse round trip") {
  for (int num = -20; num <= 20; ++num) {
    for (int den = 1; den <= 7; ++den) {
      const Rational value(num, den);
      CHECK(ParseRational(FormatRational(value)) == value);
    }
  }
}

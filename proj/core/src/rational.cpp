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

#include <cctype>
#include <sstream>

#include "dutchbook/errors.hpp"

namespace dutchbook {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer ParseUnsignedInteger(std::string_view s, std::string_view original) {
  if (!AllDigits(s)) {
    throw InputError("not a rational number: '" + std::string(original) + "'");
  }
  Integer value = 0;
  for (char c : s) {
    value *= 10;
    value += c - '0';
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw InputError("empty string is not a rational number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = ParseUnsignedInteger(s.substr(0, slash), text);
    Integer den = ParseUnsignedInteger(s.substr(slash + 1), text);
    if (den == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    return negative ? Rational(-value) : value;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    Integer num = int_part.empty() ? Integer(0) : ParseUnsignedInteger(int_part, text);
    Integer den = 1;
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("not a rational number: '" + std::string(text) + "'");
      }
      num *= 10;
      num += c - '0';
      den *= 10;
    }
    Rational value(num, den);
    return negative ? Rational(-value) : value;
  }

  Integer num = ParseUnsignedInteger(s, text);
  Rational value(num);
  return negative ? Rational(-value) : value;
}

std::string FormatRational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) {
    out << '/' << denominator(value);
  }
  return out.str();
}

std::string FormatRationalVector(const std::vector<Rational>& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatRational(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace dutchbook

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
// The market description file: a JSON document in one of three modes.
// Numbers are exact-rational strings ("3/4", "0.25") or JSON integers;
// JSON floats are rejected because they are not exact. The schema is
// documented in the repository README.

#pragma once

#include <optional>
#include <string>

#include "dutchbook/interval.hpp"
#include "dutchbook/model.hpp"

namespace dutchbook {

enum class MarketMode { kEvents, kGambles, kInterval };

std::string ModeName(MarketMode mode);

// A parsed market file. Exactly one of the three market members is
// populated, matching `mode`.
struct MarketFile {
  MarketMode mode;
  std::optional<EventQuoteSystem> quote_system;   // events mode
  std::optional<Market> market;                   // gambles mode
  std::optional<IntervalMarket> interval_market;  // interval mode
  std::optional<ReferenceMeasure> reference;      // finite modes
  std::optional<Gamble> query;                    // finite modes
  std::optional<Rational> candidate_price;        // requires query
};

// Throws InputError with field context on any schema or numeric problem.
MarketFile ParseMarketFile(const std::string& text);
MarketFile LoadMarketFile(const std::string& path);

// A reference measure on its own: a JSON array of exact rationals.
ReferenceMeasure ParseReferenceMeasure(const std::string& text);
ReferenceMeasure LoadReferenceMeasure(const std::string& path);

}  // namespace dutchbook

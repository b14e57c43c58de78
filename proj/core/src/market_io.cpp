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

#include "dutchbook/market_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dutchbook/errors.hpp"

namespace dutchbook {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& context, const std::string& message) {
  throw InputError(context + ": " + message);
}

const json& Require(const json& node, const char* key, const std::string& context) {
  auto it = node.find(key);
  if (it == node.end()) Fail(context, std::string("missing field '") + key + "'");
  return *it;
}

Rational GetRational(const json& node, const std::string& context) {
  if (node.is_string()) {
    try {
      return ParseRational(node.get<std::string>());
    } catch (const InputError& e) {
      Fail(context, e.what());
    }
  }
  if (node.is_number_integer()) {
    return Rational(node.get<long long>());
  }
  if (node.is_number_float()) {
    Fail(context,
         "JSON floats are not exact; write the number as a string "
         "(\"3/4\", \"0.25\") or an integer");
  }
  Fail(context, "expected an exact rational");
}

std::string GetString(const json& node, const std::string& context) {
  if (!node.is_string()) Fail(context, "expected a string");
  return node.get<std::string>();
}

const json& GetArray(const json& node, const std::string& context) {
  if (!node.is_array()) Fail(context, "expected an array");
  return node;
}

std::vector<Rational> GetRationalVector(const json& node, const std::string& context) {
  std::vector<Rational> values;
  const json& array = GetArray(node, context);
  for (size_t i = 0; i < array.size(); ++i) {
    values.push_back(GetRational(array[i], context + "[" + std::to_string(i) + "]"));
  }
  return values;
}

ScenarioSpace ParseScenarios(const json& doc) {
  const json& array = GetArray(Require(doc, "scenarios", "market file"), "scenarios");
  std::vector<std::string> labels;
  for (size_t i = 0; i < array.size(); ++i) {
    labels.push_back(GetString(array[i], "scenarios[" + std::to_string(i) + "]"));
  }
  try {
    return ScenarioSpace(std::move(labels));
  } catch (const InputError& e) {
    Fail("scenarios", e.what());
  }
}

Event ParseEvent(const json& node, const ScenarioSpace& space,
                 const std::string& context) {
  const json& array = GetArray(node, context);
  std::vector<int> indices;
  for (size_t i = 0; i < array.size(); ++i) {
    const std::string label =
        GetString(array[i], context + "[" + std::to_string(i) + "]");
    int index = space.IndexOf(label);
    if (index < 0) Fail(context, "unknown scenario '" + label + "'");
    indices.push_back(index);
  }
  return Event::FromIndices(indices, space.size());
}

EventQuoteSystem ParseEventsMode(const json& doc) {
  ScenarioSpace space = ParseScenarios(doc);
  const json& quotes = GetArray(Require(doc, "quotes", "market file"), "quotes");

  std::vector<std::pair<Event, Rational>> quoted;
  std::vector<Event> generators;
  for (size_t i = 0; i < quotes.size(); ++i) {
    const std::string context = "quotes[" + std::to_string(i) + "]";
    const json& entry = quotes[i];
    if (!entry.is_object()) Fail(context, "expected an object");
    Event event = ParseEvent(Require(entry, "event", context), space, context + ".event");
    Rational value = GetRational(Require(entry, "quote", context), context + ".quote");
    generators.push_back(event);
    quoted.emplace_back(event, std::move(value));
  }

  EventAlgebra algebra = GenerateAlgebra(space, generators);
  // The quoted events generate the algebra; the closure may add events,
  // and each of them needs a quote too. FromPairs reports the missing one.
  try {
    return EventQuoteSystem::FromPairs(std::move(algebra), quoted);
  } catch (const InputError& e) {
    Fail("quotes", std::string(e.what()) +
                       " (the quoted events generate an algebra; every event "
                       "of the closure must be quoted)");
  }
}

Gamble ParseGamble(const json& node, const ScenarioSpace& space,
                   const std::string& context) {
  if (!node.is_object()) Fail(context, "expected an object");
  Gamble g;
  g.name = GetString(Require(node, "name", context), context + ".name");
  g.payoffs = GetRationalVector(Require(node, "payoffs", context), context + ".payoffs");
  if (g.payoffs.size() != static_cast<size_t>(space.size())) {
    Fail(context, "gamble '" + g.name + "' has " + std::to_string(g.payoffs.size()) +
                      " payoffs for " + std::to_string(space.size()) + " scenarios");
  }
  return g;
}

Market ParseGamblesMode(const json& doc) {
  ScenarioSpace space = ParseScenarios(doc);
  const json& array = GetArray(Require(doc, "gambles", "market file"), "gambles");

  std::vector<Gamble> gambles;
  std::vector<Rational> previsions;
  for (size_t i = 0; i < array.size(); ++i) {
    const std::string context = "gambles[" + std::to_string(i) + "]";
    gambles.push_back(ParseGamble(array[i], space, context));
    previsions.push_back(
        GetRational(Require(array[i], "prevision", context), context + ".prevision"));
  }
  try {
    return Market(std::move(space), std::move(gambles), std::move(previsions));
  } catch (const InputError& e) {
    Fail("gambles", e.what());
  }
}

PiecewiseLinearGamble ParsePiecewiseGamble(const json& node,
                                           const std::string& context) {
  if (!node.is_object()) Fail(context, "expected an object");
  const std::string name =
      GetString(Require(node, "name", context), context + ".name");
  const json& pieces_json = GetArray(Require(node, "pieces", context), context + ".pieces");

  // Pieces are listed left to right; each covers (previous "to", its own
  // "to"], starting from 0 and ending at 1.
  std::vector<Rational> breakpoints = {Rational(0)};
  std::vector<AffinePiece> pieces;
  for (size_t i = 0; i < pieces_json.size(); ++i) {
    const std::string piece_context = context + ".pieces[" + std::to_string(i) + "]";
    const json& piece = pieces_json[i];
    if (!piece.is_object()) Fail(piece_context, "expected an object");
    breakpoints.push_back(
        GetRational(Require(piece, "to", piece_context), piece_context + ".to"));
    pieces.push_back(AffinePiece{
        GetRational(Require(piece, "slope", piece_context), piece_context + ".slope"),
        GetRational(Require(piece, "intercept", piece_context),
                    piece_context + ".intercept")});
  }
  try {
    return PiecewiseLinearGamble(name, std::move(breakpoints), std::move(pieces));
  } catch (const InputError& e) {
    Fail(context, e.what());
  }
}

IntervalMarket ParseIntervalMode(const json& doc) {
  const json& array = GetArray(Require(doc, "gambles", "market file"), "gambles");
  std::vector<PiecewiseLinearGamble> gambles;
  std::vector<Rational> previsions;
  for (size_t i = 0; i < array.size(); ++i) {
    const std::string context = "gambles[" + std::to_string(i) + "]";
    gambles.push_back(ParsePiecewiseGamble(array[i], context));
    previsions.push_back(
        GetRational(Require(array[i], "prevision", context), context + ".prevision"));
  }
  try {
    return IntervalMarket(std::move(gambles), std::move(previsions));
  } catch (const InputError& e) {
    Fail("gambles", e.what());
  }
}

ReferenceMeasure ParseReference(const json& node, const std::string& context) {
  try {
    return ReferenceMeasure(GetRationalVector(node, context));
  } catch (const InputError& e) {
    Fail(context, e.what());
  }
}

json ParseDocument(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("market file is not valid JSON: ") + e.what());
  }
}

}  // namespace

std::string ModeName(MarketMode mode) {
  switch (mode) {
    case MarketMode::kEvents:
      return "events";
    case MarketMode::kGambles:
      return "gambles";
    case MarketMode::kInterval:
      return "interval";
  }
  return "?";
}

MarketFile ParseMarketFile(const std::string& text) {
  const json doc = ParseDocument(text);
  if (!doc.is_object()) throw InputError("market file: expected a JSON object");

  const std::string mode = GetString(Require(doc, "mode", "market file"), "mode");
  MarketFile file;
  if (mode == "events") {
    file.mode = MarketMode::kEvents;
    file.quote_system = ParseEventsMode(doc);
  } else if (mode == "gambles") {
    file.mode = MarketMode::kGambles;
    file.market = ParseGamblesMode(doc);
  } else if (mode == "interval") {
    file.mode = MarketMode::kInterval;
    file.interval_market = ParseIntervalMode(doc);
  } else {
    Fail("mode", "expected \"events\", \"gambles\" or \"interval\", got \"" + mode + "\"");
  }

  if (file.mode != MarketMode::kInterval) {
    const ScenarioSpace& space = file.mode == MarketMode::kEvents
                                     ? file.quote_system->algebra().space()
                                     : file.market->space();
    if (auto it = doc.find("reference_measure"); it != doc.end()) {
      file.reference = ParseReference(*it, "reference_measure");
      if (file.reference->size() != space.size()) {
        Fail("reference_measure",
             "has " + std::to_string(file.reference->size()) + " weights for " +
                 std::to_string(space.size()) + " scenarios");
      }
    }
    if (auto it = doc.find("query"); it != doc.end()) {
      file.query = ParseGamble(*it, space, "query");
    }
  } else {
    for (const char* key : {"reference_measure", "query"}) {
      if (doc.find(key) != doc.end()) {
        Fail(key, "not supported in interval mode");
      }
    }
  }
  if (auto it = doc.find("candidate_price"); it != doc.end()) {
    if (!file.query.has_value()) {
      Fail("candidate_price", "requires a query gamble");
    }
    file.candidate_price = GetRational(*it, "candidate_price");
  }
  return file;
}

MarketFile LoadMarketFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open market file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseMarketFile(buffer.str());
}

ReferenceMeasure ParseReferenceMeasure(const std::string& text) {
  return ParseReference(ParseDocument(text), "reference measure file");
}

ReferenceMeasure LoadReferenceMeasure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open reference measure file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseReferenceMeasure(buffer.str());
}

}  // namespace dutchbook

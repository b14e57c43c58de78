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
// Batch interface: read a market description file, run the requested
// analysis, emit a machine-readable JSON report on stdout and diagnostics
// on stderr.
//
// Exit codes: 0 = coherent / no arbitrage (per command), 1 = a certificate
// was found, 2 = input error.

#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dutchbook/arbitrage.hpp"
#include "dutchbook/errors.hpp"
#include "dutchbook/event_coherence.hpp"
#include "dutchbook/hedging.hpp"
#include "dutchbook/interval.hpp"
#include "dutchbook/market_io.hpp"
#include "dutchbook/prevision.hpp"

namespace {

using dutchbook::Book;
using dutchbook::FormatRational;
using dutchbook::Rational;
using nlohmann::json;

constexpr int kExitClean = 0;
constexpr int kExitCertificate = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string file;
  bool relevant_only = false;
  bool full_support = false;
  bool summary = false;
  bool timing = false;
  int grid = 0;
  std::string reference_file;
};

json RationalJson(const Rational& value) { return FormatRational(value); }

json VectorJson(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(RationalJson(v));
  return out;
}

json MeasureJson(const dutchbook::PricingMeasure& q) {
  return VectorJson(q.weights());
}

json LegJson(const dutchbook::BookLeg& leg, const dutchbook::ScenarioSpace* space) {
  json out;
  if (const auto* event = std::get_if<dutchbook::Event>(&leg.instrument)) {
    json members = json::array();
    for (int index : event->Members()) members.push_back(space->labels()[index]);
    out["event"] = std::move(members);
  } else {
    out["gamble"] = std::get<std::string>(leg.instrument);
  }
  out["coefficient"] = RationalJson(leg.coefficient);
  return out;
}

json BookJson(const Book& book, const dutchbook::ScenarioSpace* space) {
  json out;
  json legs = json::array();
  for (const auto& leg : book.legs) legs.push_back(LegJson(leg, space));
  out["legs"] = std::move(legs);
  out["epsilon"] = RationalJson(book.epsilon);
  out["payoff_evidence"] = VectorJson(book.payoff_evidence);
  return out;
}

json InfJson(const dutchbook::InfResult& inf) {
  return json{{"value", RationalJson(inf.value)},
              {"attained", inf.attained},
              {"location", RationalJson(inf.location)}};
}

json IntervalCertificateJson(const dutchbook::IntervalCertificate& cert) {
  json out = BookJson(cert.book, nullptr);
  out["payoff_infimum"] = InfJson(cert.payoff_infimum);
  json samples = json::array();
  for (const auto& sample : cert.samples) {
    samples.push_back(json{{"point", RationalJson(sample.point)},
                           {"left_limit", sample.left_limit},
                           {"value", RationalJson(sample.value)}});
  }
  out["samples"] = std::move(samples);
  return out;
}

json CombinationJson(const dutchbook::LinearCombination& combo) {
  json out = json::array();
  for (const auto& [name, coefficient] : combo.terms) {
    out.push_back(json{{"gamble", name}, {"coefficient", RationalJson(coefficient)}});
  }
  return out;
}

// Events-mode inputs are analyzed both as quote systems and, for the
// market-level commands, as markets of indicator gambles.
dutchbook::Market FiniteMarket(const dutchbook::MarketFile& file) {
  if (file.mode == dutchbook::MarketMode::kEvents) {
    return dutchbook::IndicatorMarket(*file.quote_system);
  }
  return *file.market;
}

const dutchbook::ScenarioSpace* SpaceOf(const dutchbook::MarketFile& file) {
  if (file.mode == dutchbook::MarketMode::kEvents) {
    return &file.quote_system->algebra().space();
  }
  if (file.mode == dutchbook::MarketMode::kGambles) {
    return &file.market->space();
  }
  return nullptr;
}

dutchbook::ReferenceMeasure ResolveReference(const dutchbook::MarketFile& file,
                                             const Options& options,
                                             json* report) {
  if (!options.reference_file.empty()) {
    return dutchbook::LoadReferenceMeasure(options.reference_file);
  }
  if (file.reference.has_value()) return *file.reference;
  const int n = SpaceOf(file)->size();
  (*report)["notes"].push_back(
      "no reference measure given; defaulting to the uniform measure");
  return dutchbook::ReferenceMeasure(
      std::vector<Rational>(n, Rational(1, n)));
}

void RequireFiniteMode(const dutchbook::MarketFile& file, const std::string& command) {
  if (file.mode == dutchbook::MarketMode::kInterval) {
    throw dutchbook::InputError(
        command + " needs a finite market; use 'check', 'book' or 'diagnose' "
                  "for interval markets");
  }
}

int RunCheck(const dutchbook::MarketFile& file, const Options& options,
             json* report) {
  if (file.mode == dutchbook::MarketMode::kEvents) {
    if (options.relevant_only) {
      auto book = dutchbook::FindBookEvents(*file.quote_system, true);
      (*report)["notes"].push_back(
          "book search restricted to relevant events (quote > 0)");
      (*report)["coherent"] = !book.has_value();
      if (book.has_value()) {
        (*report)["book"] = BookJson(*book, SpaceOf(file));
        return kExitCertificate;
      }
      return kExitClean;
    }
    auto verdict = dutchbook::CheckCoherenceEvents(*file.quote_system);
    (*report)["coherent"] = verdict.coherent;
    json violations = json::array();
    for (const auto& violation :
         dutchbook::ValidateMeasureAxioms(*file.quote_system).violations) {
      violations.push_back(
          dutchbook::DescribeViolation(violation, *SpaceOf(file)));
    }
    (*report)["axiom_violations"] = std::move(violations);
    if (verdict.coherent) {
      (*report)["measure"] = MeasureJson(*verdict.measure);
      return kExitClean;
    }
    (*report)["book"] = BookJson(*verdict.book, SpaceOf(file));
    return kExitCertificate;
  }

  if (file.mode == dutchbook::MarketMode::kGambles) {
    auto verdict = dutchbook::CheckCoherence(*file.market);
    (*report)["coherent"] = verdict.coherent;
    if (verdict.coherent) {
      (*report)["measure"] = MeasureJson(*verdict.measure);
      return kExitClean;
    }
    (*report)["book"] = BookJson(*verdict.book, nullptr);
    return kExitCertificate;
  }

  auto cert = dutchbook::FindBookInterval(*file.interval_market);
  (*report)["coherent"] = !cert.has_value();
  if (cert.has_value()) {
    (*report)["book"] = IntervalCertificateJson(*cert);
    return kExitCertificate;
  }
  (*report)["notes"].push_back(
      "coherent; finitely additive pricing measures on the interval have no "
      "finite representation, so no measure witness is emitted");
  return kExitClean;
}

int RunBook(const dutchbook::MarketFile& file, const Options& options,
            json* report) {
  std::optional<json> book;
  switch (file.mode) {
    case dutchbook::MarketMode::kEvents: {
      auto found =
          dutchbook::FindBookEvents(*file.quote_system, options.relevant_only);
      if (options.relevant_only) {
        (*report)["notes"].push_back(
            "book search restricted to relevant events (quote > 0)");
      }
      if (found.has_value()) book = BookJson(*found, SpaceOf(file));
      break;
    }
    case dutchbook::MarketMode::kGambles: {
      auto found = dutchbook::FindBook(*file.market);
      if (found.has_value()) book = BookJson(*found, nullptr);
      break;
    }
    case dutchbook::MarketMode::kInterval: {
      auto found = dutchbook::FindBookInterval(*file.interval_market);
      if (found.has_value()) book = IntervalCertificateJson(*found);
      break;
    }
  }
  (*report)["book_found"] = book.has_value();
  if (book.has_value()) {
    (*report)["book"] = *std::move(book);
    return kExitCertificate;
  }
  return kExitClean;
}

int RunMeasure(const dutchbook::MarketFile& file, const Options& options,
               json* report) {
  RequireFiniteMode(file, "measure");
  dutchbook::Market market = FiniteMarket(file);
  std::optional<dutchbook::PricingMeasure> measure =
      options.full_support ? dutchbook::FindFullSupportMeasure(market)
                           : dutchbook::FindPricingMeasure(market);
  (*report)["full_support_requested"] = options.full_support;
  (*report)["measure_found"] = measure.has_value();
  if (!measure.has_value()) {
    (*report)["notes"].push_back(options.full_support
                                     ? "no strictly positive pricing measure"
                                     : "no pricing measure; a book exists");
    return kExitCertificate;
  }
  (*report)["measure"] = MeasureJson(*measure);
  if (options.full_support) {
    Rational floor = measure->weights()[0];
    for (const Rational& w : measure->weights()) floor = std::min(floor, w);
    (*report)["min_weight"] = RationalJson(floor);
  }
  return kExitClean;
}

int RunClassify(const dutchbook::MarketFile& file, const Options& options,
                json* report) {
  RequireFiniteMode(file, "classify");
  dutchbook::Market market = FiniteMarket(file);
  dutchbook::ReferenceMeasure reference = ResolveReference(file, options, report);
  dutchbook::ArbitrageReport result = dutchbook::Classify(market, reference);

  const auto* space = SpaceOf(file);
  json taxonomy;
  taxonomy["uniformly_strong"] =
      json{{"present", result.uniformly_strong.has_value()}};
  if (result.uniformly_strong.has_value()) {
    taxonomy["uniformly_strong"]["book"] =
        BookJson(*result.uniformly_strong, space);
  }
  taxonomy["strong"] = json{{"present", result.strong.has_value()}};
  if (result.strong.has_value()) {
    taxonomy["strong"]["book"] = BookJson(*result.strong, space);
  }
  taxonomy["p_arbitrage"] = json{{"present", result.p_arbitrage.has_value()}};
  if (result.p_arbitrage.has_value()) {
    taxonomy["p_arbitrage"]["book"] = BookJson(result.p_arbitrage->book, space);
    taxonomy["p_arbitrage"]["expected_gain"] =
        RationalJson(result.p_arbitrage->expected_gain);
  }
  taxonomy["reference"] = MeasureJson(reference);
  (*report)["arbitrage"] = std::move(taxonomy);
  for (const std::string& note : result.notes) (*report)["notes"].push_back(note);

  const bool any = result.uniformly_strong.has_value() ||
                   result.strong.has_value() || result.p_arbitrage.has_value();
  return any ? kExitCertificate : kExitClean;
}

int RunBounds(const dutchbook::MarketFile& file, const Options& options,
              json* report) {
  (void)options;
  RequireFiniteMode(file, "bounds");
  if (!file.query.has_value()) {
    throw dutchbook::InputError("bounds needs a \"query\" gamble in the market file");
  }
  dutchbook::Market market = FiniteMarket(file);
  dutchbook::PriceInterval interval =
      dutchbook::ComputePriceInterval(market, *file.query);

  (*report)["query"] = file.query->name;
  (*report)["interval"] = json{{"lower", RationalJson(interval.lower)},
                               {"upper", RationalJson(interval.upper)}};
  (*report)["lower_hedge"] = CombinationJson(interval.lower_hedge);
  (*report)["upper_hedge"] = CombinationJson(interval.upper_hedge);
  (*report)["lower_measure"] = MeasureJson(interval.lower_measure);
  (*report)["upper_measure"] = MeasureJson(interval.upper_measure);

  if (!file.candidate_price.has_value()) return kExitClean;

  auto verdict = dutchbook::CheckExtensionCoherence(market, *file.query,
                                                    *file.candidate_price);
  json extension;
  extension["candidate_price"] = RationalJson(*file.candidate_price);
  extension["coherent"] = verdict.coherent;
  if (!verdict.coherent) {
    extension["book"] = BookJson(*verdict.book, nullptr);
  }
  (*report)["extension"] = std::move(extension);
  return verdict.coherent ? kExitClean : kExitCertificate;
}

int RunDiagnose(const dutchbook::MarketFile& file, const Options& options,
                json* report) {
  if (file.mode != dutchbook::MarketMode::kInterval) {
    throw dutchbook::InputError("diagnose needs an interval-mode market file");
  }
  const dutchbook::IntervalMarket& market = *file.interval_market;
  dutchbook::Diagnosis d = dutchbook::DiagnoseCountableAdditivity(market);

  (*report)["coherent"] = d.coherent;
  (*report)["strong_arbitrage"] = d.strong_arbitrage;
  (*report)["countably_additive_excluded"] = d.countably_additive_excluded;
  if (d.book.has_value()) (*report)["book"] = IntervalCertificateJson(*d.book);
  if (d.strong_certificate.has_value()) {
    (*report)["strong_certificate"] =
        IntervalCertificateJson(*d.strong_certificate);
  }
  if (d.mass_concentration_point.has_value()) {
    (*report)["mass_concentration_point"] =
        RationalJson(*d.mass_concentration_point);
  }
  for (const std::string& note : d.notes) (*report)["notes"].push_back(note);

  if (options.grid > 0) {
    dutchbook::Market finite = dutchbook::Discretize(market, options.grid);
    auto book = dutchbook::FindBook(finite);
    json comparison;
    comparison["grid"] = options.grid;
    comparison["coherent"] = !book.has_value();
    if (book.has_value()) comparison["book"] = BookJson(*book, nullptr);
    (*report)["grid_comparison"] = std::move(comparison);
  }

  return (!d.coherent || d.strong_arbitrage) ? kExitCertificate : kExitClean;
}

void AddSummary(const std::string& command, json* report) {
  json lines = json::array();
  auto say = [&lines](const std::string& line) { lines.push_back(line); };

  if (report->contains("coherent")) {
    say(std::string("the quoted prices are ") +
        ((*report)["coherent"].get<bool>() ? "coherent: no combination of bets "
                                             "guarantees a sure win"
                                           : "incoherent: the attached book "
                                             "guarantees a sure win"));
  }
  if (report->contains("book") && (*report)["book"].contains("epsilon")) {
    say("book margin: " + (*report)["book"]["epsilon"].get<std::string>() +
        " per unit of total stake");
  }
  if (report->contains("measure") && command == "measure") {
    say("a consistent pricing measure exists; expectations under it "
        "reproduce every quoted price");
  }
  if (report->contains("interval")) {
    say("coherent prices for the query gamble form the closed interval [" +
        (*report)["interval"]["lower"].get<std::string>() + ", " +
        (*report)["interval"]["upper"].get<std::string>() + "]");
  }
  if (report->contains("arbitrage")) {
    const auto& taxonomy = (*report)["arbitrage"];
    say(std::string("uniformly strong arbitrage: ") +
        (taxonomy["uniformly_strong"]["present"].get<bool>() ? "present" : "absent"));
    say(std::string("strong arbitrage: ") +
        (taxonomy["strong"]["present"].get<bool>() ? "present" : "absent"));
    say(std::string("arbitrage relative to the reference measure: ") +
        (taxonomy["p_arbitrage"]["present"].get<bool>() ? "present" : "absent"));
  }
  if (report->contains("countably_additive_excluded") &&
      (*report)["countably_additive_excluded"].get<bool>()) {
    say("prices are coherent yet a strategy wins at every outcome; only "
        "finitely additive pricing measures exist, concentrated near ω = " +
        (*report)["mass_concentration_point"].get<std::string>());
  }
  (*report)["summary"] = std::move(lines);
}

int RunCommand(const std::string& command, const Options& options) {
  const auto started = std::chrono::steady_clock::now();
  dutchbook::MarketFile file = dutchbook::LoadMarketFile(options.file);

  json report;
  report["tool"] = "dutchbook";
  report["command"] = command;
  report["mode"] = dutchbook::ModeName(file.mode);
  report["input"] = options.file;
  report["notes"] = json::array();

  int exit_code = kExitInputError;
  if (command == "check") {
    exit_code = RunCheck(file, options, &report);
  } else if (command == "book") {
    exit_code = RunBook(file, options, &report);
  } else if (command == "measure") {
    exit_code = RunMeasure(file, options, &report);
  } else if (command == "classify") {
    exit_code = RunClassify(file, options, &report);
  } else if (command == "bounds") {
    exit_code = RunBounds(file, options, &report);
  } else if (command == "diagnose") {
    exit_code = RunDiagnose(file, options, &report);
  }

  report["exit_code"] = exit_code;
  if (options.summary) AddSummary(command, &report);
  if (options.timing) {
    // Off by default so identical inputs produce byte-identical reports.
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }

  std::cout << report.dump(2) << "\n";
  if (options.summary) {
    for (const auto& line : report["summary"]) {
      std::cerr << "  " << line.get<std::string>() << "\n";
    }
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dutchbook: exact coherence, arbitrage and price-bound analysis for "
      "finite and interval betting markets"};
  app.require_subcommand(1);

  Options options;
  const char* descriptions[][2] = {
      {"check", "decide coherence and emit the witness (book or measure)"},
      {"book", "search for a book only"},
      {"measure", "find a pricing measure (--full-support for a strictly positive one)"},
      {"classify", "run the arbitrage taxonomy against a reference measure"},
      {"bounds", "price interval for the query gamble, plus extension verdict"},
      {"diagnose", "interval markets: coherence vs countable additivity"},
  };
  for (const auto& [name, description] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("file", options.file, "market description file (JSON)")
        ->required();
    sub->add_flag("--summary", options.summary, "add a prose summary");
    sub->add_flag("--timing", options.timing, "include wall-clock timing");
    if (std::string(name) == "check" || std::string(name) == "book") {
      sub->add_flag("--relevant-only", options.relevant_only,
                    "events mode: only bet on events with positive quotes");
    }
    if (std::string(name) == "measure") {
      sub->add_flag("--full-support", options.full_support,
                    "require strictly positive scenario weights");
    }
    if (std::string(name) == "classify") {
      sub->add_option("--reference", options.reference_file,
                      "reference measure file (JSON array of rationals)");
    }
    if (std::string(name) == "diagnose") {
      sub->add_option("--grid", options.grid,
                      "also analyze the restriction to the grid {1/N,...,1}")
          ->check(CLI::PositiveNumber);
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return RunCommand(app.get_subcommands().front()->get_name(), options);
  } catch (const dutchbook::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const dutchbook::IncoherentMarketError& e) {
    // Pricing against an incoherent market: report the book on stderr.
    std::cerr << "incoherent market: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 3;
  }
}

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

#include "dutchbook/model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "dutchbook/errors.hpp"

namespace dutchbook {

namespace {
constexpr int kMaxScenarios = 64;    // events are 64-bit masks
constexpr int kMaxAlgebraAtoms = 12; // closure has 2^atoms events

std::uint64_t FullMask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}
}  // namespace

ScenarioSpace::ScenarioSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InputError("a scenario space needs at least one scenario");
  }
  if (labels_.size() > kMaxScenarios) {
    throw InputError("scenario spaces are limited to 64 scenarios");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InputError("duplicate scenario label '" + label + "'");
    }
  }
}

int ScenarioSpace::IndexOf(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

Event Event::FromIndices(const std::vector<int>& indices, int space_size) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= space_size) {
      throw InputError("event references out-of-range scenario index " +
                       std::to_string(i));
    }
    mask |= std::uint64_t{1} << i;
  }
  return Event(mask);
}

int Event::Cardinality() const { return std::popcount(mask_); }

std::vector<int> Event::Members() const {
  std::vector<int> members;
  for (int i = 0; i < 64; ++i) {
    if (Contains(i)) members.push_back(i);
  }
  return members;
}

Event Event::Complement(int space_size) const {
  return Event((~mask_) & FullMask(space_size));
}

bool Event::CanonicalLess(const Event& a, const Event& b) {
  int ca = a.Cardinality(), cb = b.Cardinality();
  if (ca != cb) return ca < cb;
  if (a.mask_ == b.mask_) return false;
  // Lexicographic order on sorted member lists: the set owning the lowest
  // differing index comes first.
  std::uint64_t diff = a.mask_ ^ b.mask_;
  std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask_ & lowest) != 0;
}

std::string Event::Describe(const ScenarioSpace& space) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < space.size(); ++i) {
    if (!Contains(i)) continue;
    if (!first) out += ",";
    out += space.labels()[i];
    first = false;
  }
  out += "}";
  return out;
}

EventAlgebra::EventAlgebra(ScenarioSpace space, std::vector<Event> events)
    : space_(std::move(space)), events_(std::move(events)) {
  std::sort(events_.begin(), events_.end(), Event::CanonicalLess);
  events_.erase(std::unique(events_.begin(), events_.end()), events_.end());

  const std::uint64_t full = FullMask(space_.size());
  std::unordered_set<std::uint64_t> masks;
  for (const Event& e : events_) {
    if ((e.mask() & ~full) != 0) {
      throw InputError("event references scenarios outside the space");
    }
    masks.insert(e.mask());
  }
  if (!masks.count(0) || !masks.count(full)) {
    throw InputError("an event algebra must contain the empty event and the full space");
  }
  for (const Event& e : events_) {
    if (!masks.count(e.Complement(space_.size()).mask())) {
      throw InputError("event algebra not closed under complement at " +
                       e.Describe(space_));
    }
  }
  for (size_t i = 0; i < events_.size(); ++i) {
    for (size_t j = i + 1; j < events_.size(); ++j) {
      if (!masks.count(events_[i].mask() | events_[j].mask())) {
        throw InputError("event algebra not closed under union at " +
                         events_[i].Describe(space_) + " ∪ " +
                         events_[j].Describe(space_));
      }
    }
  }
}

bool EventAlgebra::Contains(const Event& event) const {
  return IndexOf(event) >= 0;
}

int EventAlgebra::IndexOf(const Event& event) const {
  auto it = std::lower_bound(events_.begin(), events_.end(), event,
                             Event::CanonicalLess);
  if (it != events_.end() && *it == event) {
    return static_cast<int>(it - events_.begin());
  }
  return -1;
}

std::vector<Event> EventAlgebra::Atoms() const {
  // The atom of a scenario is the intersection of all events containing it.
  std::vector<Event> atoms;
  std::unordered_set<std::uint64_t> seen;
  for (int scenario = 0; scenario < space_.size(); ++scenario) {
    std::uint64_t atom = FullMask(space_.size());
    for (const Event& e : events_) {
      if (e.Contains(scenario)) atom &= e.mask();
    }
    if (seen.insert(atom).second) atoms.push_back(Event::FromMask(atom));
  }
  std::sort(atoms.begin(), atoms.end(), Event::CanonicalLess);
  return atoms;
}

EventAlgebra GenerateAlgebra(const ScenarioSpace& space,
                             const std::vector<Event>& generators) {
  const int n = space.size();
  const std::uint64_t full = FullMask(n);
  for (const Event& g : generators) {
    if ((g.mask() & ~full) != 0) {
      throw InputError("generator event references out-of-range scenario index");
    }
  }

  // Refine the scenario space by the generators; the closure is exactly the
  // set of unions of the resulting cells.
  std::vector<std::uint64_t> cells = {full};
  for (const Event& g : generators) {
    std::vector<std::uint64_t> refined;
    for (std::uint64_t cell : cells) {
      std::uint64_t inside = cell & g.mask();
      std::uint64_t outside = cell & ~g.mask();
      if (inside) refined.push_back(inside);
      if (outside) refined.push_back(outside);
    }
    cells = std::move(refined);
  }

  if (cells.size() > kMaxAlgebraAtoms) {
    throw InputError("generated algebra would have 2^" +
                     std::to_string(cells.size()) + " events; at most " +
                     std::to_string(kMaxAlgebraAtoms) + " atoms are supported");
  }

  std::vector<Event> events;
  events.reserve(std::size_t{1} << cells.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cells.size()); ++pick) {
    std::uint64_t mask = 0;
    for (size_t c = 0; c < cells.size(); ++c) {
      if ((pick >> c) & 1u) mask |= cells[c];
    }
    events.push_back(Event::FromMask(mask));
  }
  return EventAlgebra(space, std::move(events));
}

EventQuoteSystem::EventQuoteSystem(EventAlgebra algebra, std::vector<Rational> quotes)
    : algebra_(std::move(algebra)), quotes_(std::move(quotes)) {
  if (quotes_.size() != static_cast<size_t>(algebra_.size())) {
    throw InputError("every event of the algebra needs exactly one quote (" +
                     std::to_string(algebra_.size()) + " events, " +
                     std::to_string(quotes_.size()) + " quotes)");
  }
}

EventQuoteSystem EventQuoteSystem::FromPairs(
    EventAlgebra algebra, const std::vector<std::pair<Event, Rational>>& quotes) {
  std::vector<std::optional<Rational>> slots(algebra.size());
  for (const auto& [event, value] : quotes) {
    int idx = algebra.IndexOf(event);
    if (idx < 0) {
      throw InputError("quoted event " + event.Describe(algebra.space()) +
                       " is not in the algebra");
    }
    if (slots[idx].has_value()) {
      throw InputError("event " + event.Describe(algebra.space()) +
                       " quoted more than once");
    }
    slots[idx] = value;
  }
  std::vector<Rational> aligned;
  aligned.reserve(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].has_value()) {
      throw InputError("missing quote for event " +
                       algebra.events()[i].Describe(algebra.space()));
    }
    aligned.push_back(*slots[i]);
  }
  return EventQuoteSystem(std::move(algebra), std::move(aligned));
}

const Rational& EventQuoteSystem::quote(const Event& event) const {
  int idx = algebra_.IndexOf(event);
  if (idx < 0) {
    throw InputError("event " + event.Describe(algebra_.space()) +
                     " is not in the algebra");
  }
  return quotes_[idx];
}

AxiomReport ValidateMeasureAxioms(const EventQuoteSystem& q) {
  AxiomReport report;
  const auto& events = q.algebra().events();
  const auto& quotes = q.quotes();
  const int n = q.algebra().space().size();

  for (size_t i = 0; i < events.size(); ++i) {
    if (quotes[i] < 0) {
      report.violations.push_back(NegativityViolation{events[i], quotes[i]});
    }
  }

  const Event full = Event::FromMask(FullMask(n));
  if (q.quote(full) != 1) {
    report.violations.push_back(NormalizationViolation{q.quote(full)});
  }

  // Disjoint pairs, unordered, including (∅, ∅) which pins quote(∅) = 0.
  for (size_t i = 0; i < events.size(); ++i) {
    for (size_t j = i; j < events.size(); ++j) {
      if (i == j && !events[i].IsEmpty()) continue;
      if (!events[i].IsDisjointFrom(events[j])) continue;
      Rational gap = q.quote(events[i].Union(events[j])) - quotes[i] - quotes[j];
      if (gap != 0) {
        report.violations.push_back(AdditivityViolation{events[i], events[j], gap});
      }
    }
  }
  return report;
}

std::string DescribeViolation(const AxiomViolation& violation,
                              const ScenarioSpace& space) {
  if (const auto* neg = std::get_if<NegativityViolation>(&violation)) {
    return "negative quote " + FormatRational(neg->quote) + " on " +
           neg->event.Describe(space);
  }
  if (const auto* norm = std::get_if<NormalizationViolation>(&violation)) {
    return "quote on the full space is " + FormatRational(norm->full_space_quote) +
           ", not 1";
  }
  const auto& add = std::get<AdditivityViolation>(violation);
  return "additivity gap " + FormatRational(add.gap) + " on disjoint pair " +
         add.left.Describe(space) + ", " + add.right.Describe(space);
}

Gamble UnitGamble(int scenario_count, std::string name) {
  return Gamble{std::move(name), std::vector<Rational>(scenario_count, Rational(1))};
}

PricingMeasure::PricingMeasure(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("a measure needs at least one weight");
  Rational total = 0;
  for (const Rational& w : weights_) {
    if (w < 0) {
      throw InputError("measure weight " + FormatRational(w) + " is negative");
    }
    total += w;
  }
  if (total != 1) {
    throw InputError("measure weights sum to " + FormatRational(total) + ", not 1");
  }
}

bool PricingMeasure::FullSupport() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w > 0; });
}

Market::Market(ScenarioSpace space, std::vector<Gamble> gambles,
               std::vector<Rational> previsions)
    : space_(std::move(space)),
      gambles_(std::move(gambles)),
      previsions_(std::move(previsions)),
      cell_(std::make_shared<detail::LazyCell>()) {
  if (gambles_.size() != previsions_.size()) {
    throw InputError("every gamble needs exactly one prevision");
  }
  std::unordered_set<std::string_view> names;
  bool has_unit = false;
  for (const Gamble& g : gambles_) {
    if (g.payoffs.size() != static_cast<size_t>(space_.size())) {
      throw InputError("gamble '" + g.name + "' has " +
                       std::to_string(g.payoffs.size()) + " payoffs for " +
                       std::to_string(space_.size()) + " scenarios");
    }
    if (!names.insert(g.name).second) {
      throw InputError("duplicate gamble name '" + g.name + "'");
    }
    has_unit |= std::all_of(g.payoffs.begin(), g.payoffs.end(),
                            [](const Rational& p) { return p == 1; });
  }
  if (!has_unit) {
    throw InputError("a market must contain the constant-one gamble");
  }
}

int Market::IndexOf(std::string_view name) const {
  for (size_t i = 0; i < gambles_.size(); ++i) {
    if (gambles_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

Market Market::WithGamble(Gamble gamble, Rational prevision) const {
  std::vector<Gamble> gambles = gambles_;
  std::vector<Rational> previsions = previsions_;
  gambles.push_back(std::move(gamble));
  previsions.push_back(std::move(prevision));
  return Market(space_, std::move(gambles), std::move(previsions));
}

Rational Expectation(const PricingMeasure& q, const Gamble& f) {
  return Expectation(q, f.payoffs);
}

Rational Expectation(const PricingMeasure& q, const std::vector<Rational>& payoffs) {
  if (payoffs.size() != static_cast<size_t>(q.size())) {
    throw InputError("expectation dimension mismatch: " +
                     std::to_string(q.size()) + " weights, " +
                     std::to_string(payoffs.size()) + " payoffs");
  }
  Rational total = 0;
  for (size_t j = 0; j < payoffs.size(); ++j) {
    total += q.weights()[j] * payoffs[j];
  }
  return total;
}

}  // namespace dutchbook

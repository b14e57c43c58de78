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
// Core model: finite scenario spaces, event algebras, bookmaker quote
// systems, gambles, markets and exact probability vectors. All types are
// immutable after construction and all operations are pure functions, so
// everything here is safe to share across threads without coordination.

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dutchbook/rational.hpp"

namespace dutchbook {

namespace detail {
// One-shot cache slot attached to a Market. The coherence engine stores its
// (type-erased) analysis here so repeated pricing calls against the same
// market value do not re-solve the book LP. Copies of a Market share the
// slot, which is sound because the cached analysis depends on content only.
struct LazyCell {
  std::mutex mu;
  std::shared_ptr<const void> value;
};
}  // namespace detail

// A finite set of scenario names, sized 1..64. The index of a label is its
// position in the constructor list; events are bit-sets over these indices.
class ScenarioSpace {
 public:
  explicit ScenarioSpace(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Returns the index of `label`, or -1 when absent.
  int IndexOf(std::string_view label) const;

  bool operator==(const ScenarioSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A set of scenarios, canonically a bit-set over scenario indices.
class Event {
 public:
  Event() = default;

  static Event FromMask(std::uint64_t mask) { return Event(mask); }
  // Validates every index against the space size.
  static Event FromIndices(const std::vector<int>& indices, int space_size);

  std::uint64_t mask() const { return mask_; }
  bool Contains(int scenario) const { return (mask_ >> scenario) & 1u; }
  bool IsEmpty() const { return mask_ == 0; }
  int Cardinality() const;
  std::vector<int> Members() const;

  Event Union(const Event& other) const { return Event(mask_ | other.mask_); }
  Event Intersect(const Event& other) const { return Event(mask_ & other.mask_); }
  Event Complement(int space_size) const;
  bool IsDisjointFrom(const Event& other) const { return (mask_ & other.mask_) == 0; }
  bool IsSubsetOf(const Event& other) const { return (mask_ & ~other.mask_) == 0; }

  // Indicator value at a scenario, as a Rational (0 or 1).
  Rational Indicator(int scenario) const { return Contains(scenario) ? 1 : 0; }

  // The deterministic event order used throughout: by cardinality first,
  // then lexicographically on the sorted member lists.
  static bool CanonicalLess(const Event& a, const Event& b);

  // Human-readable "{a,b}" rendering against a space.
  std::string Describe(const ScenarioSpace& space) const;

  bool operator==(const Event&) const = default;

 private:
  explicit Event(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

// A family of events containing the empty event and the full space, closed
// under complement and pairwise union. Events are stored in canonical
// order, so anything derived from an algebra is reproducible bit-for-bit.
class EventAlgebra {
 public:
  // Validates the closure properties; throws InputError otherwise.
  EventAlgebra(ScenarioSpace space, std::vector<Event> events);

  const ScenarioSpace& space() const { return space_; }
  const std::vector<Event>& events() const { return events_; }
  int size() const { return static_cast<int>(events_.size()); }

  bool Contains(const Event& event) const;
  // Position of an event in the canonical order, or -1.
  int IndexOf(const Event& event) const;

  // The minimal non-empty events. Atoms partition the scenario space and
  // every algebra event is a disjoint union of atoms.
  std::vector<Event> Atoms() const;

 private:
  ScenarioSpace space_;
  std::vector<Event> events_;
};

// Smallest algebra containing the generators: adds the empty event and the
// full space and closes under complement and pairwise union. Generating
// from an algebra's own events returns the same event set.
EventAlgebra GenerateAlgebra(const ScenarioSpace& space,
                             const std::vector<Event>& generators);

// A bookmaker's quotes: one rational stake multiplier per algebra event.
class EventQuoteSystem {
 public:
  // `quotes` aligned with algebra.events() canonical order.
  EventQuoteSystem(EventAlgebra algebra, std::vector<Rational> quotes);

  static EventQuoteSystem FromPairs(
      EventAlgebra algebra, const std::vector<std::pair<Event, Rational>>& quotes);

  const EventAlgebra& algebra() const { return algebra_; }
  const std::vector<Rational>& quotes() const { return quotes_; }
  const Rational& quote(const Event& event) const;

 private:
  EventAlgebra algebra_;
  std::vector<Rational> quotes_;
};

// Violations of the finitely additive probability axioms.
struct NegativityViolation {
  Event event;
  Rational quote;  // quote < 0
};
struct NormalizationViolation {
  Rational full_space_quote;  // != 1
};
struct AdditivityViolation {
  Event left, right;  // disjoint
  Rational gap;       // quote(left ∪ right) - quote(left) - quote(right), != 0
};
using AxiomViolation =
    std::variant<NegativityViolation, NormalizationViolation, AdditivityViolation>;

// Exhaustive listing of every violated axiom instance. Empty if and only
// if the quote system is a finitely additive probability measure. The book
// constructor consumes a chosen entry, hence all of them are enumerated,
// not just the first.
struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool empty() const { return violations.empty(); }
};

AxiomReport ValidateMeasureAxioms(const EventQuoteSystem& q);

std::string DescribeViolation(const AxiomViolation& violation,
                              const ScenarioSpace& space);

// A named payoff vector, one rational per scenario.
struct Gamble {
  std::string name;
  std::vector<Rational> payoffs;
};

// The constant-one gamble (a zero-coupon bond with zero interest).
Gamble UnitGamble(int scenario_count, std::string name = "unit");

// An exact probability vector: nonnegative weights summing to one.
class PricingMeasure {
 public:
  explicit PricingMeasure(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }
  bool FullSupport() const;

  bool operator==(const PricingMeasure&) const = default;

 private:
  std::vector<Rational> weights_;
};

// A fixed reference probability for the ℙ-arbitrage notion. Same
// invariants as a pricing measure; the distinct name records the distinct
// role.
using ReferenceMeasure = PricingMeasure;

// A family of gambles with quoted previsions. Must contain the
// constant-one gamble; gamble names must be unique so certificates can
// reference legs unambiguously.
class Market {
 public:
  Market(ScenarioSpace space, std::vector<Gamble> gambles,
         std::vector<Rational> previsions);

  const ScenarioSpace& space() const { return space_; }
  const std::vector<Gamble>& gambles() const { return gambles_; }
  const std::vector<Rational>& previsions() const { return previsions_; }
  int scenario_count() const { return space_.size(); }
  int gamble_count() const { return static_cast<int>(gambles_.size()); }

  // Index of a gamble by name, or -1.
  int IndexOf(std::string_view name) const;
  const Rational& prevision(int gamble_index) const { return previsions_[gamble_index]; }

  // A new market with one extra quoted gamble (fresh analysis cache).
  Market WithGamble(Gamble gamble, Rational prevision) const;

  // Implementation detail of the coherence engine; see detail::LazyCell.
  const std::shared_ptr<detail::LazyCell>& analysis_cell() const { return cell_; }

 private:
  ScenarioSpace space_;
  std::vector<Gamble> gambles_;
  std::vector<Rational> previsions_;
  std::shared_ptr<detail::LazyCell> cell_;
};

// Exact expectation Σ_j q_j · f(ω_j). Throws InputError on dimension
// mismatch.
Rational Expectation(const PricingMeasure& q, const Gamble& f);
Rational Expectation(const PricingMeasure& q, const std::vector<Rational>& payoffs);

}  // namespace dutchbook

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gfo/error.hpp"
#include "gfo/time.hpp"

namespace gfo {

// ---------------------------------------------------------------------------
// Values and properties

struct Symbol {
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend bool operator<(const Symbol& a, const Symbol& b) { return a.name < b.name; }
};

/// A property value: a categorical symbol or an exact number.
using Value = std::variant<Symbol, Rational>;

std::string format_value(const Value& v);

struct CategoricalDomain {
  std::set<std::string> symbols;
  friend bool operator==(const CategoricalDomain&, const CategoricalDomain&) = default;
};
struct NumericDomain {
  friend bool operator==(const NumericDomain&, const NumericDomain&) = default;
};
using ValueDomain = std::variant<CategoricalDomain, NumericDomain>;

struct IsolatedSupport {
  friend bool operator==(const IsolatedSupport&, const IsolatedSupport&) = default;
};
struct NonIsolatedSupport {
  Rational window_radius;
  friend bool operator==(const NonIsolatedSupport&, const NonIsolatedSupport&) = default;
};
struct GlobalSupport {
  friend bool operator==(const GlobalSupport&, const GlobalSupport&) = default;
};
/// How much of a process a property needs to be determined: a single
/// boundary, a window around a boundary, or the whole extended process.
using Support = std::variant<IsolatedSupport, NonIsolatedSupport, GlobalSupport>;

struct PropertyDef {
  std::string name;
  ValueDomain domain;
  Support support;

  bool is_isolated() const { return std::holds_alternative<IsolatedSupport>(support); }
  bool is_numeric() const { return std::holds_alternative<NumericDomain>(domain); }
  /// True when `v` has the domain's type (and, if categorical, is a member).
  bool admits(const Value& v) const;

  friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge, Defined };

std::string_view to_string(CompareOp op);

/// `op value`; Defined matches any value that is present.
struct ValueConstraint {
  CompareOp op = CompareOp::Eq;
  std::optional<Value> value;

  static ValueConstraint equals(Value v) { return {CompareOp::Eq, std::move(v)}; }
  static ValueConstraint defined() { return {CompareOp::Defined, std::nullopt}; }

  bool accepts(const std::optional<Value>& v) const;
  std::string str() const;

  friend bool operator==(const ValueConstraint&, const ValueConstraint&) = default;
};

// ---------------------------------------------------------------------------
// Individuals

using Valuation = std::map<std::string, Value>;

/// Wholly present at one time boundary; holds only isolated property values.
struct Presential {
  std::string id;
  TimeBoundary at;
  Valuation valuation;
  bool material = true;

  const TimeCoordinate& coordinate() const { return at.coordinate; }
  friend bool operator==(const Presential&, const Presential&) = default;
};

using SampleMap = std::map<TimeCoordinate, std::string>;
using Trajectory = std::vector<std::pair<TimeCoordinate, Value>>;

/// Temporally extended individual. The boundary map is a finite sample of
/// its process boundaries; two processes may share an identical map and
/// still be distinct.
struct Process {
  std::string id;
  Chronoid extent;
  SampleMap boundaries;
  std::map<std::string, Trajectory> trajectories;

  friend bool operator==(const Process&, const Process&) = default;
};

struct Continuant {
  std::string id;
  Chronoid lifetime;
  SampleMap exhibits;
  bool material = true;

  friend bool operator==(const Continuant&, const Continuant&) = default;
};

/// Relator plus arguments. A fact whose relator names a property carries
/// a value and exactly one argument (the bearer): `color(ball) = red`.
struct Fact {
  std::string relator;
  std::vector<std::string> args;
  std::optional<Value> value;
  std::string name;  // optional, empty when anonymous

  bool is_property_fact() const { return value.has_value(); }
  std::string str() const;

  friend bool operator==(const Fact&, const Fact&) = default;
  friend bool operator<(const Fact& a, const Fact& b);
};

using SituationExtent = std::variant<Chronoid, TimeBoundary>;

struct Situation {
  std::string id;
  SituationExtent extent;
  std::vector<Fact> constituents;  // sorted, unique
  std::set<std::string> participants;
  std::optional<std::string> founded_on;

  bool is_presentic() const { return std::holds_alternative<TimeBoundary>(extent); }
  bool contains(const Fact& f) const;

  friend bool operator==(const Situation&, const Situation&) = default;
};

// ---------------------------------------------------------------------------
// Functions

inline constexpr std::string_view kWildcard = "_";

struct FactPattern {
  std::string relator;
  std::vector<std::string> args;  // ids or kWildcard
  std::optional<ValueConstraint> value;

  bool matches(const Fact& f) const;
  std::string str() const;

  friend bool operator==(const FactPattern&, const FactPattern&) = default;
};

struct PropertyRequirement {
  std::string entity;
  std::string property;
  ValueConstraint constraint;

  friend bool operator==(const PropertyRequirement&, const PropertyRequirement&) = default;
};

/// Concept whose instances are situations (requirements or goals).
struct SituationConcept {
  std::string name;
  std::vector<FactPattern> required_facts;
  std::vector<PropertyRequirement> required_props;

  bool empty() const { return required_facts.empty() && required_props.empty(); }
  friend bool operator==(const SituationConcept&, const SituationConcept&) = default;
};

struct ItemConstraint {
  std::string property;
  ValueConstraint constraint;
  friend bool operator==(const ItemConstraint&, const ItemConstraint&) = default;
};

enum class FunctionKind { Conceptual, Universal, Individual };

std::string_view to_string(FunctionKind kind);

/// Labels, requirement concept, goal concept and functional item.
struct FunctionSpec {
  std::string id;
  std::set<std::string> labels;
  SituationConcept req;
  SituationConcept goal;
  std::vector<ItemConstraint> fitem;
  FunctionKind kind = FunctionKind::Conceptual;
  std::optional<std::string> bearer;

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

// ---------------------------------------------------------------------------
// Store

enum class EntityKind { Continuant, Presential, Process, Situation, Fact };

std::string_view to_string(EntityKind kind);

/// Entity store. Each kind lives in its own map, keyed by id, so that the
/// store stays canonical (sorted) and a cross-kind clash can be detected
/// rather than silently overwritten.
struct Model {
  std::map<std::string, PropertyDef> properties;
  std::map<std::string, Chronoid> chronoids;
  std::map<std::string, Presential> presentials;
  std::map<std::string, Process> processes;
  std::map<std::string, Continuant> continuants;
  std::map<std::string, Situation> situations;
  std::map<std::string, FunctionSpec> functions;
  std::set<std::pair<std::string, std::string>> exe;  // (executor, process)
  std::map<std::string, std::set<std::string>> requirement_instances;
  std::map<std::string, std::set<std::string>> goal_instances;

  /// All kinds under which `id` is declared (more than one breaks disjointness).
  std::vector<EntityKind> kinds_of(const std::string& id) const;
  bool has_entity(const std::string& id) const { return !kinds_of(id).empty(); }

  const PropertyDef& property(const std::string& name) const;
  const Presential& presential(const std::string& id) const;
  const Process& process(const std::string& id) const;
  const Continuant& continuant(const std::string& id) const;
  const Situation& situation(const std::string& id) const;
  const FunctionSpec& function(const std::string& id) const;

  /// Adds a process and registers its extent chronoid if missing.
  void add_process(Process p);

  /// Total number of declared time samples across processes and continuants.
  std::size_t sample_count() const;
  std::size_t entity_count() const;

  friend bool operator==(const Model&, const Model&) = default;
};

/// Structural invariants of the store; returns human-readable problems.
std::vector<std::string> validate(const Model& m);

// ---------------------------------------------------------------------------
// Operations

/// Throws Error(UnknownEntity) when `id` is undeclared. When an id is
/// declared under several kinds, the first in enum order is returned.
EntityKind classify(const std::string& id, const Model& m);

/// procbd(P, t, N). Throws OutOfExtent or UnsampledTime.
const Presential& process_boundary(const Process& p, const TimeCoordinate& t, const Model& m);

/// Restriction of `p` to [l, r]; both bounds must be sampled.
/// Throws NotASubinterval or UnsampledTime.
Process process_temporal_part(const Process& p, const TimeCoordinate& l, const TimeCoordinate& r);

/// exhib(C, t, M). Throws OutOfLifetime or UnsampledTime.
const Presential& snapshot(const Continuant& c, const TimeCoordinate& t, const Model& m);

/// Valuation of an individual at a sampled time, if it has one there.
/// Continuants answer with their snapshot, processes with their boundary,
/// presentials with themselves when `t` is their coordinate.
std::optional<Valuation> valuation_at(const std::string& id, const TimeCoordinate& t,
                                      const Model& m);

}  // namespace gfo

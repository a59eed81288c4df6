#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gfo/model.hpp"

namespace gfo {

struct AtTime {
  TimeCoordinate t;
  friend bool operator==(const AtTime&, const AtTime&) = default;
};
struct During {
  Chronoid span;
  friend bool operator==(const During&, const During&) = default;
};
struct Unanchored {
  friend bool operator==(const Unanchored&, const Unanchored&) = default;
};
using TimeRef = std::variant<AtTime, During, Unanchored>;

/// `holds(subject, property, constraint)`
struct HoldsProp {
  std::string subject;
  std::string property;
  ValueConstraint constraint;
  friend bool operator==(const HoldsProp&, const HoldsProp&) = default;
};

/// `fact relator(args...)`, args are ids or `_`.
struct FactProp {
  std::string relator;
  std::vector<std::string> args;
  friend bool operator==(const FactProp&, const FactProp&) = default;
};

/// Elementary proposition: a single fact or property claim, optionally
/// anchored in time.
struct Proposition {
  std::variant<HoldsProp, FactProp> form;
  TimeRef when = Unanchored{};

  std::string str() const;
  friend bool operator==(const Proposition&, const Proposition&) = default;
};

/// (P, S, f): a process, a situation founded on it, and a fact of that situation.
struct TruthMakerTriple {
  std::string process;
  std::string situation;
  Fact fact;

  friend bool operator==(const TruthMakerTriple&, const TruthMakerTriple&) = default;
  friend bool operator<(const TruthMakerTriple& a, const TruthMakerTriple& b);
};

enum class PropertySupportClass { PresenticIsolated, PresenticNonIsolated, Global };

std::string_view to_string(PropertySupportClass c);

/// Throws Error(MalformedTriple) when the situation is not founded on the
/// process or the fact is not one of its constituents.
bool satisfies(const TruthMakerTriple& tm, const Proposition& phi, const Model& m);

/// All truth-makers of `phi` in canonical order. An empty result means the
/// model holds no truth-maker, not that `phi` is false.
std::vector<TruthMakerTriple> find_truthmakers(const Model& m, const Proposition& phi);

/// Throws Error(UnknownEntity) when `process` is not a declared process.
bool has_propositional_property(const std::string& process, const Proposition& phi,
                                const Model& m);

/// Throws Error(UnknownProperty).
PropertySupportClass classify_property_support(const std::string& property, const Process& p,
                                               const Model& m);

/// Being a realization of `f` is a global property of `p`. Only processes
/// bear functional properties, so there is no overload for presentials.
bool functional_property(const Process& p, const FunctionSpec& f, const Model& m);

}  // namespace gfo

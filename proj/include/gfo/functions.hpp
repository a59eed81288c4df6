#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gfo/model.hpp"

namespace gfo {

/// Instance-of test for requirement and goal concepts. Every fact pattern
/// must match a constituent; every property requirement must hold for its
/// participant, either through a property fact of the situation or, for a
/// presentic situation, through the participant's state at that instant.
/// Throws Error(UnknownSituation) when `s` is not in `m`.
bool satisfies_concept(const Situation& s, const SituationConcept& c, const Model& m);

struct RealizationRecord {
  std::string process;
  std::string requirement_situation;
  std::string goal_situation;

  friend bool operator==(const RealizationRecord&, const RealizationRecord&) = default;
};

/// RI_act(p, f): a presentic situation at p's initial boundary satisfies the
/// requirements and one at its final boundary satisfies the goal. The
/// smallest qualifying situation ids are reported.
std::optional<RealizationRecord> is_actual_realization(const Process& p, const FunctionSpec& f,
                                                       const Model& m);

struct UniversalRealization {
  bool holds = false;
  std::vector<RealizationRecord> records;
  std::vector<std::string> unrealized;  // members without a realization
  std::vector<std::string> uncovered;   // requirement instances no member starts from
};

/// UnRI_act(cat, f). Requirement instances are the situations registered
/// for `f` that satisfy its requirement concept.
UniversalRealization is_universal_realization(const std::set<std::string>& members,
                                              const FunctionSpec& f, const Model& m);

/// Exe(x, p), read off the declared assertions. Throws UnknownEntity.
bool executes(const std::string& executor, const std::string& process, const Model& m);

/// R_Act(x, f). Throws UnknownEntity.
bool is_actual_realizer(const std::string& x, const FunctionSpec& f, const Model& m);

/// Every entity that is an actual realizer of `f`, sorted.
std::vector<std::string> realizers(const FunctionSpec& f, const Model& m);

/// Every process that actually realizes `f`, by process id.
std::vector<RealizationRecord> realizations(const FunctionSpec& f, const Model& m);

struct FItemResult {
  bool satisfied = true;
  std::vector<ItemConstraint> unmet;
};

/// Checks the functional item against the bearer's state at `t`.
/// Throws UnknownEntity, or UnsampledTime when the bearer has no state at t.
FItemResult check_fitem(const std::string& bearer, const FunctionSpec& f, const Model& m,
                        const TimeCoordinate& t);

}  // namespace gfo

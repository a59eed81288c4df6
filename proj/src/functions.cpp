#include "gfo/functions.hpp"

#include <algorithm>

namespace gfo {

namespace {

bool participates(const Situation& s, const std::string& id) {
  if (s.participants.count(id)) return true;
  return std::any_of(s.constituents.begin(), s.constituents.end(), [&](const Fact& f) {
    return std::find(f.args.begin(), f.args.end(), id) != f.args.end();
  });
}

bool property_holds(const Situation& s, const PropertyRequirement& req, const Model& m) {
  if (!participates(s, req.entity)) return false;
  for (const auto& f : s.constituents) {
    if (f.is_property_fact() && f.relator == req.property && f.args.size() == 1 &&
        f.args.front() == req.entity && req.constraint.accepts(f.value)) {
      return true;
    }
  }
  const auto* at = std::get_if<TimeBoundary>(&s.extent);
  if (at == nullptr) return false;
  auto valuation = valuation_at(req.entity, at->coordinate, m);
  if (!valuation) return false;
  std::optional<Value> v;
  if (auto it = valuation->find(req.property); it != valuation->end()) v = it->second;
  return req.constraint.accepts(v);
}

const Situation* first_at(const TimeCoordinate& t, const SituationConcept& c, const Model& m) {
  for (const auto& [id, s] : m.situations) {
    const auto* at = std::get_if<TimeBoundary>(&s.extent);
    if (at != nullptr && at->coordinate == t && satisfies_concept(s, c, m)) return &s;
  }
  return nullptr;
}

void require_entity(const std::string& id, const Model& m) {
  if (!m.has_entity(id)) throw Error(ErrorKind::UnknownEntity, "unknown entity '" + id + "'");
}

}  // namespace

bool satisfies_concept(const Situation& s, const SituationConcept& c, const Model& m) {
  if (!m.situations.count(s.id)) {
    throw Error(ErrorKind::UnknownSituation, "unknown situation '" + s.id + "'");
  }
  for (const auto& pattern : c.required_facts) {
    auto hit = std::any_of(s.constituents.begin(), s.constituents.end(),
                           [&](const Fact& f) { return pattern.matches(f); });
    if (!hit) return false;
  }
  return std::all_of(c.required_props.begin(), c.required_props.end(),
                     [&](const PropertyRequirement& r) { return property_holds(s, r, m); });
}

std::optional<RealizationRecord> is_actual_realization(const Process& p, const FunctionSpec& f,
                                                       const Model& m) {
  const auto* req = first_at(p.extent.left, f.req, m);
  if (req == nullptr) return std::nullopt;
  const auto* goal = first_at(p.extent.right, f.goal, m);
  if (goal == nullptr) return std::nullopt;
  return RealizationRecord{p.id, req->id, goal->id};
}

UniversalRealization is_universal_realization(const std::set<std::string>& members,
                                              const FunctionSpec& f, const Model& m) {
  UniversalRealization out;
  std::set<std::string> covered;
  for (const auto& id : members) {
    auto record = is_actual_realization(m.process(id), f, m);
    if (!record) {
      out.unrealized.push_back(id);
      continue;
    }
    covered.insert(record->requirement_situation);
    out.records.push_back(std::move(*record));
  }
  if (auto it = m.requirement_instances.find(f.id); it != m.requirement_instances.end()) {
    for (const auto& sid : it->second) {
      auto s = m.situations.find(sid);
      if (s == m.situations.end() || !satisfies_concept(s->second, f.req, m)) continue;
      if (!covered.count(sid)) out.uncovered.push_back(sid);
    }
  }
  out.holds = out.unrealized.empty() && out.uncovered.empty();
  return out;
}

bool executes(const std::string& executor, const std::string& process, const Model& m) {
  require_entity(executor, m);
  require_entity(process, m);
  return m.exe.count({executor, process}) > 0;
}

bool is_actual_realizer(const std::string& x, const FunctionSpec& f, const Model& m) {
  require_entity(x, m);
  for (auto it = m.exe.lower_bound({x, std::string()}); it != m.exe.end() && it->first == x; ++it) {
    auto p = m.processes.find(it->second);
    if (p != m.processes.end() && is_actual_realization(p->second, f, m)) return true;
  }
  return false;
}

std::vector<std::string> realizers(const FunctionSpec& f, const Model& m) {
  std::vector<std::string> out;
  for (const auto& [x, pid] : m.exe) {
    if (!out.empty() && out.back() == x) continue;
    if (m.has_entity(x) && is_actual_realizer(x, f, m)) out.push_back(x);
  }
  return out;
}

std::vector<RealizationRecord> realizations(const FunctionSpec& f, const Model& m) {
  std::vector<RealizationRecord> out;
  for (const auto& [id, p] : m.processes) {
    if (auto r = is_actual_realization(p, f, m)) out.push_back(std::move(*r));
  }
  return out;
}

FItemResult check_fitem(const std::string& bearer, const FunctionSpec& f, const Model& m,
                        const TimeCoordinate& t) {
  require_entity(bearer, m);
  auto valuation = valuation_at(bearer, t, m);
  if (!valuation) {
    throw Error(ErrorKind::UnsampledTime, bearer + " has no sampled state at " + t.str());
  }
  FItemResult out;
  for (const auto& item : f.fitem) {
    std::optional<Value> v;
    if (auto it = valuation->find(item.property); it != valuation->end()) v = it->second;
    if (!item.constraint.accepts(v)) out.unmet.push_back(item);
  }
  out.satisfied = out.unmet.empty();
  return out;
}

}  // namespace gfo

#include "gfo/model.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

namespace gfo {

std::string format_value(const Value& v) {
  if (const auto* s = std::get_if<Symbol>(&v)) return s->name;
  return format_rational(std::get<Rational>(v));
}

bool PropertyDef::admits(const Value& v) const {
  if (const auto* cat = std::get_if<CategoricalDomain>(&domain)) {
    const auto* s = std::get_if<Symbol>(&v);
    return s != nullptr && cat->symbols.count(s->name) > 0;
  }
  return std::holds_alternative<Rational>(v);
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "!=";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
    case CompareOp::Defined: return "= _";
  }
  return "?";
}

bool ValueConstraint::accepts(const std::optional<Value>& v) const {
  if (!v) return false;
  if (op == CompareOp::Defined) return true;
  if (!value) return false;
  switch (op) {
    case CompareOp::Eq: return *v == *value;
    case CompareOp::Ne: return *v != *value;
    default: break;
  }
  // Ordering only makes sense between numbers.
  const auto* lhs = std::get_if<Rational>(&*v);
  const auto* rhs = std::get_if<Rational>(&*value);
  if (lhs == nullptr || rhs == nullptr) return false;
  switch (op) {
    case CompareOp::Lt: return *lhs < *rhs;
    case CompareOp::Le: return *lhs <= *rhs;
    case CompareOp::Gt: return *lhs > *rhs;
    case CompareOp::Ge: return *lhs >= *rhs;
    default: return false;
  }
}

std::string ValueConstraint::str() const {
  if (op == CompareOp::Defined) return "= _";
  return std::string(to_string(op)) + " " + (value ? format_value(*value) : "?");
}

namespace {

std::string call_text(const std::string& relator, const std::vector<std::string>& args) {
  std::string out = relator + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i];
  }
  return out + ")";
}

}  // namespace

std::string Fact::str() const {
  auto out = call_text(relator, args);
  if (value) out += " = " + format_value(*value);
  return out;
}

bool operator<(const Fact& a, const Fact& b) {
  return std::tie(a.relator, a.args, a.value, a.name) <
         std::tie(b.relator, b.args, b.value, b.name);
}

bool Situation::contains(const Fact& f) const {
  return std::binary_search(constituents.begin(), constituents.end(), f);
}

bool FactPattern::matches(const Fact& f) const {
  if (f.relator != relator || f.args.size() != args.size()) return false;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != kWildcard && args[i] != f.args[i]) return false;
  }
  if (value) return value->accepts(f.value);
  return true;
}

std::string FactPattern::str() const {
  auto out = call_text(relator, args);
  if (value) out += " " + value->str();
  return out;
}

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Conceptual: return "conceptual";
    case FunctionKind::Universal: return "universal";
    case FunctionKind::Individual: return "individual";
  }
  return "?";
}

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Continuant: return "Continuant";
    case EntityKind::Presential: return "Presential";
    case EntityKind::Process: return "Process";
    case EntityKind::Situation: return "Situation";
    case EntityKind::Fact: return "Fact";
  }
  return "?";
}

std::vector<EntityKind> Model::kinds_of(const std::string& id) const {
  std::vector<EntityKind> kinds;
  if (continuants.count(id)) kinds.push_back(EntityKind::Continuant);
  if (presentials.count(id)) kinds.push_back(EntityKind::Presential);
  if (processes.count(id)) kinds.push_back(EntityKind::Process);
  if (situations.count(id)) kinds.push_back(EntityKind::Situation);
  for (const auto& [_, s] : situations) {
    auto named = std::any_of(s.constituents.begin(), s.constituents.end(),
                             [&](const Fact& f) { return f.name == id; });
    if (named) {
      kinds.push_back(EntityKind::Fact);
      break;
    }
  }
  return kinds;
}

namespace {

template <class Map>
const auto& lookup(const Map& map, const std::string& id, ErrorKind kind, std::string_view what) {
  auto it = map.find(id);
  if (it == map.end()) throw Error(kind, "unknown " + std::string(what) + " '" + id + "'");
  return it->second;
}

}  // namespace

const PropertyDef& Model::property(const std::string& name) const {
  return lookup(properties, name, ErrorKind::UnknownProperty, "property");
}
const Presential& Model::presential(const std::string& id) const {
  return lookup(presentials, id, ErrorKind::UnknownEntity, "presential");
}
const Process& Model::process(const std::string& id) const {
  return lookup(processes, id, ErrorKind::UnknownEntity, "process");
}
const Continuant& Model::continuant(const std::string& id) const {
  return lookup(continuants, id, ErrorKind::UnknownEntity, "continuant");
}
const Situation& Model::situation(const std::string& id) const {
  return lookup(situations, id, ErrorKind::UnknownSituation, "situation");
}
const FunctionSpec& Model::function(const std::string& id) const {
  return lookup(functions, id, ErrorKind::UnknownEntity, "function");
}

void Model::add_process(Process p) {
  chronoids.emplace(p.extent.id, p.extent);
  auto id = p.id;
  processes.insert_or_assign(std::move(id), std::move(p));
}

std::size_t Model::sample_count() const {
  std::size_t n = 0;
  for (const auto& [_, p] : processes) n += p.boundaries.size();
  for (const auto& [_, c] : continuants) n += c.exhibits.size();
  return n;
}

std::size_t Model::entity_count() const {
  return continuants.size() + presentials.size() + processes.size() + situations.size();
}

namespace {

void check_samples(const std::string& owner, const Chronoid& span, const SampleMap& samples,
                   const Model& m, std::vector<std::string>& out) {
  if (!samples.count(span.left) || !samples.count(span.right)) {
    out.push_back(owner + ": endpoints of " + span.id + " must be sampled");
  }
  for (const auto& [t, pid] : samples) {
    if (!span.contains(t)) out.push_back(owner + ": sample " + t.str() + " outside " + span.id);
    auto it = m.presentials.find(pid);
    if (it == m.presentials.end()) {
      out.push_back(owner + ": unknown presential '" + pid + "'");
    } else if (it->second.coordinate() != t) {
      out.push_back(owner + ": presential '" + pid + "' is at " + it->second.coordinate().str() +
                    ", not " + t.str());
    }
  }
}

bool resolves(const Model& m, const std::string& id) { return m.has_entity(id); }

}  // namespace

std::vector<std::string> validate(const Model& m) {
  std::vector<std::string> out;
  for (const auto& [name, def] : m.properties) {
    if (const auto* ni = std::get_if<NonIsolatedSupport>(&def.support); ni && ni->window_radius <= 0) {
      out.push_back("property " + name + ": window radius must be positive");
    }
  }
  for (const auto& [id, ch] : m.chronoids) {
    if (ch.left >= ch.right) out.push_back("chronoid " + id + ": non-positive duration");
  }
  for (const auto& [id, p] : m.presentials) {
    for (const auto& [prop, v] : p.valuation) {
      auto it = m.properties.find(prop);
      if (it == m.properties.end()) {
        out.push_back("presential " + id + ": unknown property " + prop);
      } else if (!it->second.is_isolated()) {
        out.push_back("presential " + id + ": " + prop + " is not an isolated property");
      } else if (!it->second.admits(v)) {
        out.push_back("presential " + id + ": value " + format_value(v) + " outside domain of " + prop);
      }
    }
  }
  for (const auto& [id, p] : m.processes) {
    check_samples("process " + id, p.extent, p.boundaries, m, out);
    for (const auto& [prop, traj] : p.trajectories) {
      auto it = m.properties.find(prop);
      if (it == m.properties.end()) {
        out.push_back("process " + id + ": unknown property " + prop);
        continue;
      }
      if (it->second.is_isolated()) {
        out.push_back("process " + id + ": trajectory of isolated property " + prop);
      }
      for (std::size_t i = 0; i < traj.size(); ++i) {
        if (!p.extent.contains(traj[i].first)) {
          out.push_back("process " + id + ": trajectory sample outside extent");
        }
        if (i > 0 && !(traj[i - 1].first < traj[i].first)) {
          out.push_back("process " + id + ": trajectory of " + prop + " not strictly increasing");
        }
        if (!it->second.admits(traj[i].second)) {
          out.push_back("process " + id + ": trajectory value outside domain of " + prop);
        }
      }
    }
  }
  for (const auto& [id, c] : m.continuants) check_samples("continuant " + id, c.lifetime, c.exhibits, m, out);
  for (const auto& [id, s] : m.situations) {
    if (s.founded_on && !m.processes.count(*s.founded_on)) {
      out.push_back("situation " + id + ": founded on unknown process " + *s.founded_on);
    }
    for (const auto& who : s.participants) {
      if (!resolves(m, who)) out.push_back("situation " + id + ": unknown participant " + who);
    }
    for (const auto& f : s.constituents) {
      if (f.args.empty()) out.push_back("situation " + id + ": fact without arguments");
      for (const auto& a : f.args) {
        if (!resolves(m, a)) out.push_back("situation " + id + ": unknown fact argument " + a);
      }
      if (f.value) {
        auto it = m.properties.find(f.relator);
        if (it == m.properties.end() || f.args.size() != 1 || !it->second.admits(*f.value)) {
          out.push_back("situation " + id + ": malformed property fact " + f.str());
        }
      }
    }
  }
  for (const auto& [id, f] : m.functions) {
    if (f.kind == FunctionKind::Individual && (!f.bearer || !resolves(m, *f.bearer))) {
      out.push_back("function " + id + ": individual function needs a resolvable bearer");
    }
    for (const auto& item : f.fitem) {
      if (!m.properties.count(item.property)) {
        out.push_back("function " + id + ": unknown property " + item.property);
      }
    }
  }
  for (const auto& [x, p] : m.exe) {
    if (!resolves(m, x)) out.push_back("exe: unknown executor " + x);
    if (!m.processes.count(p)) out.push_back("exe: unknown process " + p);
  }
  for (const auto* registry : {&m.requirement_instances, &m.goal_instances}) {
    for (const auto& [fid, sids] : *registry) {
      if (!m.functions.count(fid)) out.push_back("instance registry: unknown function " + fid);
      for (const auto& sid : sids) {
        if (!m.situations.count(sid)) out.push_back("instance registry: unknown situation " + sid);
      }
    }
  }
  return out;
}

EntityKind classify(const std::string& id, const Model& m) {
  auto kinds = m.kinds_of(id);
  if (kinds.empty()) throw Error(ErrorKind::UnknownEntity, "unknown entity '" + id + "'");
  return kinds.front();
}

const Presential& process_boundary(const Process& p, const TimeCoordinate& t, const Model& m) {
  if (!p.extent.contains(t)) {
    throw Error(ErrorKind::OutOfExtent, t.str() + " is outside the extent of " + p.id);
  }
  auto it = p.boundaries.find(t);
  if (it == p.boundaries.end()) {
    throw Error(ErrorKind::UnsampledTime, p.id + " has no boundary sample at " + t.str());
  }
  return m.presential(it->second);
}

Process process_temporal_part(const Process& p, const TimeCoordinate& l, const TimeCoordinate& r) {
  if (l >= r || l < p.extent.left || r > p.extent.right) {
    throw Error(ErrorKind::NotASubinterval,
                "[" + l.str() + "," + r.str() + "] is not a subinterval of " + p.id);
  }
  for (const auto* bound : {&l, &r}) {
    if (!p.boundaries.count(*bound)) {
      throw Error(ErrorKind::UnsampledTime, p.id + " has no boundary sample at " + bound->str());
    }
  }
  Process part;
  part.extent = temporal_part_chronoid(p.extent, l, r);
  part.id = p.id + "-part-" + coordinate_tag(l) + "-" + coordinate_tag(r);
  for (auto it = p.boundaries.lower_bound(l); it != p.boundaries.end() && it->first <= r; ++it) {
    part.boundaries.insert(*it);
  }
  for (const auto& [prop, traj] : p.trajectories) {
    Trajectory kept;
    std::copy_if(traj.begin(), traj.end(), std::back_inserter(kept),
                 [&](const auto& sample) { return l <= sample.first && sample.first <= r; });
    if (!kept.empty()) part.trajectories.emplace(prop, std::move(kept));
  }
  return part;
}

const Presential& snapshot(const Continuant& c, const TimeCoordinate& t, const Model& m) {
  if (!c.lifetime.contains(t)) {
    throw Error(ErrorKind::OutOfLifetime, t.str() + " is outside the lifetime of " + c.id);
  }
  auto it = c.exhibits.find(t);
  if (it == c.exhibits.end()) {
    throw Error(ErrorKind::UnsampledTime, c.id + " exhibits nothing at " + t.str());
  }
  return m.presential(it->second);
}

std::optional<Valuation> valuation_at(const std::string& id, const TimeCoordinate& t,
                                      const Model& m) {
  if (auto it = m.continuants.find(id); it != m.continuants.end()) {
    auto s = it->second.exhibits.find(t);
    if (s == it->second.exhibits.end()) return std::nullopt;
    return m.presential(s->second).valuation;
  }
  if (auto it = m.processes.find(id); it != m.processes.end()) {
    const auto& p = it->second;
    Valuation v;
    if (auto s = p.boundaries.find(t); s != p.boundaries.end()) v = m.presential(s->second).valuation;
    for (const auto& [prop, traj] : p.trajectories) {
      for (const auto& [at, value] : traj) {
        if (at == t) v.emplace(prop, value);
      }
    }
    if (v.empty() && !p.boundaries.count(t)) return std::nullopt;
    return v;
  }
  if (auto it = m.presentials.find(id); it != m.presentials.end()) {
    if (it->second.coordinate() != t) return std::nullopt;
    return it->second.valuation;
  }
  return std::nullopt;
}

}  // namespace gfo

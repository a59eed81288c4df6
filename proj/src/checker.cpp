#include "gfo/checker.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "gfo/functions.hpp"

namespace gfo {

const std::vector<std::string_view>& registered_axioms() {
  static const std::vector<std::string_view> names{
      axiom::kDisjointness, axiom::kIntegration, axiom::kIntegrationNoProcess,
      axiom::kPresentialDependence, axiom::kRequirementInstance};
  return names;
}

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

bool canonical_less(const Violation& a, const Violation& b) {
  return std::tie(a.axiom, a.subjects, a.at, a.message, a.severity) <
         std::tie(b.axiom, b.subjects, b.at, b.message, b.severity);
}

void sort_canonical(std::vector<Violation>& vs) {
  std::sort(vs.begin(), vs.end(), canonical_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<Violation> check_disjointness(const Model& m) {
  std::set<std::string> ids;
  for (const auto& [id, _] : m.continuants) ids.insert(id);
  for (const auto& [id, _] : m.presentials) ids.insert(id);
  for (const auto& [id, _] : m.processes) ids.insert(id);
  for (const auto& [id, s] : m.situations) {
    ids.insert(id);
    for (const auto& f : s.constituents) {
      if (!f.name.empty()) ids.insert(f.name);
    }
  }
  std::vector<Violation> out;
  for (const auto& id : ids) {
    auto kinds = m.kinds_of(id);
    if (kinds.size() < 2) continue;
    std::string names;
    for (auto k : kinds) {
      if (!names.empty()) names += ", ";
      names += to_string(k);
    }
    out.push_back({std::string(axiom::kDisjointness), {id}, std::nullopt,
                   "'" + id + "' is declared as " + names, Severity::Error});
  }
  return out;
}

namespace {

bool same_presential(const Model& m, const std::string& a, const std::string& b,
                     IntegrationMode mode) {
  if (a == b) return true;
  if (mode == IntegrationMode::Identity) return false;
  auto pa = m.presentials.find(a);
  auto pb = m.presentials.find(b);
  if (pa == m.presentials.end() || pb == m.presentials.end()) return false;
  return pa->second.coordinate() == pb->second.coordinate() &&
         pa->second.valuation == pb->second.valuation;
}

struct Comparison {
  std::vector<Violation> mismatches;
  std::vector<TimeCoordinate> matched;
  bool candidate = false;
};

Comparison compare(const Model& m, const Continuant& c, const Process& p, IntegrationMode mode) {
  Comparison out;
  const std::vector<std::string> subjects{c.id, p.id};
  bool same_extent = p.extent.left == c.lifetime.left && p.extent.right == c.lifetime.right;
  out.candidate = same_extent;
  if (!same_extent) {
    out.mismatches.push_back(
        {std::string(axiom::kIntegration), subjects, std::nullopt,
         "lifetime [" + c.lifetime.left.str() + "," + c.lifetime.right.str() +
             "] differs from extent [" + p.extent.left.str() + "," + p.extent.right.str() + "]",
         Severity::Error});
  }
  auto ci = c.exhibits.begin();
  auto pi = p.boundaries.begin();
  while (ci != c.exhibits.end() || pi != p.boundaries.end()) {
    if (pi == p.boundaries.end() || (ci != c.exhibits.end() && ci->first < pi->first)) {
      out.mismatches.push_back({std::string(axiom::kIntegration), subjects, ci->first,
                                p.id + " has no boundary where " + c.id + " exhibits " + ci->second,
                                Severity::Error});
      ++ci;
    } else if (ci == c.exhibits.end() || pi->first < ci->first) {
      out.mismatches.push_back({std::string(axiom::kIntegration), subjects, pi->first,
                                c.id + " exhibits nothing where " + p.id + " has boundary " +
                                    pi->second,
                                Severity::Error});
      ++pi;
    } else {
      if (same_presential(m, ci->second, pi->second, mode)) {
        out.candidate = true;
        out.matched.push_back(ci->first);
      } else {
        out.mismatches.push_back({std::string(axiom::kIntegration), subjects, ci->first,
                                  c.id + " exhibits " + ci->second + " but the boundary of " + p.id +
                                      " is " + pi->second,
                                  Severity::Error});
      }
      ++ci;
      ++pi;
    }
  }
  return out;
}

}  // namespace

IntegrationResult check_integration(const Model& m, const Continuant& c, IntegrationMode mode) {
  const Process* best = nullptr;
  Comparison best_cmp;
  for (const auto& [id, p] : m.processes) {
    auto cmp = compare(m, c, p, mode);
    if (cmp.mismatches.empty()) return IntegrationWitness{c.id, id, std::move(cmp.matched)};
    if (!cmp.candidate) continue;
    if (best == nullptr || cmp.mismatches.size() < best_cmp.mismatches.size()) {
      best = &p;
      best_cmp = std::move(cmp);
    }
  }
  if (best == nullptr) {
    return std::vector<Violation>{{std::string(axiom::kIntegrationNoProcess), {c.id}, std::nullopt,
                                   "no process has the lifetime and boundaries of " + c.id,
                                   Severity::Error}};
  }
  sort_canonical(best_cmp.mismatches);
  return std::move(best_cmp.mismatches);
}

Process derive_process(const Model& m, const Continuant& c) {
  if (!c.exhibits.count(c.lifetime.left) || !c.exhibits.count(c.lifetime.right)) {
    throw Error(ErrorKind::MalformedContinuant,
                c.id + " does not exhibit presentials at both lifetime endpoints");
  }
  std::string base = c.id + "-process";
  std::string id = base;
  for (int n = 2; m.has_entity(id); ++n) id = base + "-" + std::to_string(n);
  return Process{id, c.lifetime, c.exhibits, {}};
}

Model complete_model(const Model& m, IntegrationMode mode, std::vector<std::string>* derived) {
  Model out = m;
  for (const auto& [id, c] : m.continuants) {
    if (!c.material) continue;
    if (std::holds_alternative<IntegrationWitness>(check_integration(out, c, mode))) continue;
    auto p = derive_process(out, c);
    if (derived) derived->push_back(p.id);
    out.add_process(std::move(p));
  }
  return out;
}

std::vector<Violation> check_presential_dependence(const Model& m) {
  std::set<std::string> referenced;
  for (const auto& [_, p] : m.processes) {
    for (const auto& [t, pid] : p.boundaries) referenced.insert(pid);
  }
  std::vector<Violation> out;
  for (const auto& [id, pres] : m.presentials) {
    if (!pres.material || referenced.count(id)) continue;
    out.push_back({std::string(axiom::kPresentialDependence), {id}, pres.coordinate(),
                   "material presential " + id + " is not a boundary of any process",
                   Severity::Error});
  }
  return out;
}

std::vector<ContinuantChange> detect_continuant_changes(const Model& m, const Continuant& c) {
  std::vector<ContinuantChange> out;
  if (c.exhibits.size() < 2) return out;
  for (auto next = std::next(c.exhibits.begin()), prev = c.exhibits.begin();
       next != c.exhibits.end(); ++prev, ++next) {
    const auto& before = m.presential(prev->second).valuation;
    const auto& after = m.presential(next->second).valuation;
    std::set<std::string> props;
    for (const auto& [k, _] : before) props.insert(k);
    for (const auto& [k, _] : after) props.insert(k);
    for (const auto& prop : props) {
      std::optional<Value> v1, v2;
      if (auto it = before.find(prop); it != before.end()) v1 = it->second;
      if (auto it = after.find(prop); it != after.end()) v2 = it->second;
      if (v1 != v2) out.push_back({prev->first, next->first, prop, v1, v2});
    }
  }
  return out;
}

std::vector<TimeCoordinate> detect_process_changes(const Model& m, const Process& p,
                                                   const std::string& property,
                                                   const Rational& tolerance) {
  m.property(property);
  auto it = p.trajectories.find(property);
  if (it == p.trajectories.end()) {
    throw Error(ErrorKind::UnknownProperty, p.id + " has no trajectory for " + property);
  }
  const auto& traj = it->second;
  std::vector<TimeCoordinate> out;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const auto& [t1, v1] = traj[i - 1];
    const auto& [t2, v2] = traj[i];
    bool changed = false;
    const auto* n1 = std::get_if<Rational>(&v1);
    const auto* n2 = std::get_if<Rational>(&v2);
    if (n1 && n2) {
      Rational diff = *n2 - *n1;
      if (diff < 0) diff = -diff;
      changed = diff > tolerance;
    } else {
      changed = v1 != v2;
    }
    if (changed) out.push_back(t1.midpoint(t2));
  }
  return out;
}

std::vector<Violation> check_requirement_instances(const Model& m) {
  std::vector<Violation> out;
  for (const auto& [fid, sids] : m.requirement_instances) {
    auto f = m.functions.find(fid);
    if (f == m.functions.end()) continue;
    for (const auto& sid : sids) {
      if (!m.situations.count(sid)) continue;
      if (satisfies_concept(m.situation(sid), f->second.req, m)) continue;
      out.push_back({std::string(axiom::kRequirementInstance), {fid, sid}, std::nullopt,
                     sid + " is registered as a requirement instance of " + fid +
                         " but does not satisfy its requirements",
                     Severity::Warning});
    }
  }
  return out;
}

std::size_t CheckReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [](const Violation& v) { return v.severity == Severity::Error; }));
}

CheckReport run_checks(const Model& m, const CheckOptions& opts) {
  CheckReport report;
  report.checked = opts.complete ? complete_model(m, opts.mode, &report.derived) : m;
  const Model& model = report.checked;

  auto append = [&](std::vector<Violation> vs) {
    report.violations.insert(report.violations.end(), std::make_move_iterator(vs.begin()),
                             std::make_move_iterator(vs.end()));
  };
  append(check_disjointness(model));
  for (const auto& [id, c] : model.continuants) {
    if (!c.material) continue;
    auto result = check_integration(model, c, opts.mode);
    if (auto* w = std::get_if<IntegrationWitness>(&result)) {
      report.witnesses.push_back(std::move(*w));
    } else {
      append(std::get<std::vector<Violation>>(std::move(result)));
    }
  }
  append(check_presential_dependence(model));
  append(check_requirement_instances(model));
  sort_canonical(report.violations);
  return report;
}

}  // namespace gfo

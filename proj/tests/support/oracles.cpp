#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace gfo::testing {

namespace {

bool exhib(const Continuant& c, const TimeCoordinate& t, const std::string& m) {
  for (const auto& [at, id] : c.exhibits) {
    if (at == t && id == m) return true;
  }
  return false;
}

bool procbd(const Process& p, const TimeCoordinate& t, const std::string& m) {
  for (const auto& [at, id] : p.boundaries) {
    if (at == t && id == m) return true;
  }
  return false;
}

}  // namespace

IntegrationOracle integration_oracle(const Model& m, const Continuant& c) {
  std::set<TimeCoordinate> times;
  for (const auto& [t, _] : c.exhibits) times.insert(t);
  for (const auto& [_, p] : m.processes) {
    for (const auto& [t, __] : p.boundaries) times.insert(t);
  }
  std::set<std::string> presentials;
  for (const auto& [id, _] : m.presentials) presentials.insert(id);
  for (const auto& [_, id] : c.exhibits) presentials.insert(id);

  IntegrationOracle out;
  for (const auto& [pid, p] : m.processes) {
    bool same_extent = c.lifetime.left == p.extent.left && c.lifetime.right == p.extent.right;
    bool all = same_extent;
    bool shares = false;
    std::set<std::optional<TimeCoordinate>> bad;
    if (!same_extent) bad.insert(std::nullopt);
    for (const auto& t : times) {
      for (const auto& mid : presentials) {
        bool a = exhib(c, t, mid);
        bool b = procbd(p, t, mid);
        if (a != b) {
          all = false;
          bad.insert(t);
        }
        if (a && b) shares = true;
      }
    }
    if (same_extent || shares) {
      out.has_candidate = true;
      out.mismatches[pid] = std::move(bad);
    }
    if (all && !out.witness) out.witness = pid;
  }
  return out;
}

namespace {

bool time_ok(const Situation& s, const TimeRef& when) {
  if (std::holds_alternative<Unanchored>(when)) return true;
  TimeCoordinate lo, hi;
  if (const auto* b = std::get_if<TimeBoundary>(&s.extent)) {
    lo = hi = b->coordinate;
  } else {
    lo = std::get<Chronoid>(s.extent).left;
    hi = std::get<Chronoid>(s.extent).right;
  }
  if (const auto* at = std::get_if<AtTime>(&when)) {
    return s.is_presentic() && lo == at->t;
  }
  const auto& span = std::get<During>(when).span;
  return !(lo < span.left) && !(span.right < hi);
}

bool fact_ok(const Fact& f, const Proposition& phi) {
  if (const auto* fp = std::get_if<FactProp>(&phi.form)) {
    if (f.value.has_value() || f.relator != fp->relator) return false;
    if (f.args.size() != fp->args.size()) return false;
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (fp->args[i] != "_" && fp->args[i] != f.args[i]) return false;
    }
    return true;
  }
  const auto& hp = std::get<HoldsProp>(phi.form);
  if (!f.value.has_value() || f.relator != hp.property) return false;
  if (f.args != std::vector<std::string>{hp.subject}) return false;
  const auto& c = hp.constraint;
  if (c.op == CompareOp::Defined) return true;
  if (c.op == CompareOp::Eq) return *f.value == *c.value;
  if (c.op == CompareOp::Ne) return !(*f.value == *c.value);
  const auto* lhs = std::get_if<Rational>(&*f.value);
  const auto* rhs = std::get_if<Rational>(&*c.value);
  if (!lhs || !rhs) return false;
  switch (c.op) {
    case CompareOp::Lt: return *lhs < *rhs;
    case CompareOp::Le: return !(*rhs < *lhs);
    case CompareOp::Gt: return *rhs < *lhs;
    case CompareOp::Ge: return !(*lhs < *rhs);
    default: return false;
  }
}

}  // namespace

std::vector<TruthMakerTriple> truthmaker_oracle(const Model& m, const Proposition& phi) {
  std::vector<Fact> all_facts;
  for (const auto& [_, s] : m.situations) {
    all_facts.insert(all_facts.end(), s.constituents.begin(), s.constituents.end());
  }
  std::vector<TruthMakerTriple> out;
  for (const auto& [pid, p] : m.processes) {
    for (const auto& [sid, s] : m.situations) {
      for (const auto& f : all_facts) {
        bool founded = s.founded_on.has_value() && *s.founded_on == pid;
        bool part = std::find(s.constituents.begin(), s.constituents.end(), f) != s.constituents.end();
        if (!founded || !part) continue;
        if (!fact_ok(f, phi) || !time_ok(s, phi.when)) continue;
        TruthMakerTriple tm{pid, sid, f};
        if (std::find(out.begin(), out.end(), tm) == out.end()) out.push_back(tm);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gfo::testing

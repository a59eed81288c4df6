#include "gfo/truthmakers.hpp"

#include <algorithm>
#include <tuple>

#include "gfo/functions.hpp"

namespace gfo {

namespace {

std::string args_text(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i];
  }
  return out;
}

bool matches_time(const Situation& s, const TimeRef& when) {
  if (std::holds_alternative<Unanchored>(when)) return true;
  if (const auto* at = std::get_if<AtTime>(&when)) {
    const auto* b = std::get_if<TimeBoundary>(&s.extent);
    return b != nullptr && b->coordinate == at->t;
  }
  const auto& span = std::get<During>(when).span;
  if (const auto* b = std::get_if<TimeBoundary>(&s.extent)) return span.contains(b->coordinate);
  return span.contains(std::get<Chronoid>(s.extent));
}

bool matches_form(const Fact& f, const Proposition& phi) {
  if (const auto* fp = std::get_if<FactProp>(&phi.form)) {
    if (f.is_property_fact()) return false;
    return FactPattern{fp->relator, fp->args, std::nullopt}.matches(f);
  }
  const auto& hp = std::get<HoldsProp>(phi.form);
  return f.is_property_fact() && f.relator == hp.property && f.args.size() == 1 &&
         f.args.front() == hp.subject && hp.constraint.accepts(f.value);
}

}  // namespace

std::string Proposition::str() const {
  std::string out;
  if (const auto* fp = std::get_if<FactProp>(&form)) {
    out = "fact " + fp->relator + "(" + args_text(fp->args) + ")";
  } else {
    const auto& hp = std::get<HoldsProp>(form);
    out = "holds(" + hp.subject + ", " + hp.property + ", ";
    out += hp.constraint.op == CompareOp::Eq ? format_value(*hp.constraint.value)
           : hp.constraint.op == CompareOp::Defined ? std::string("_")
                                                    : hp.constraint.str();
    out += ")";
  }
  if (const auto* at = std::get_if<AtTime>(&when)) {
    out += " at " + at->t.str();
  } else if (const auto* d = std::get_if<During>(&when)) {
    out += " during [" + d->span.left.str() + ", " + d->span.right.str() + "]";
  }
  return out;
}

bool operator<(const TruthMakerTriple& a, const TruthMakerTriple& b) {
  return std::tie(a.process, a.situation, a.fact) < std::tie(b.process, b.situation, b.fact);
}

std::string_view to_string(PropertySupportClass c) {
  switch (c) {
    case PropertySupportClass::PresenticIsolated: return "presenticIsolated";
    case PropertySupportClass::PresenticNonIsolated: return "presenticNonIsolated";
    case PropertySupportClass::Global: return "global";
  }
  return "?";
}

bool satisfies(const TruthMakerTriple& tm, const Proposition& phi, const Model& m) {
  auto s = m.situations.find(tm.situation);
  if (s == m.situations.end() || !m.processes.count(tm.process)) {
    throw Error(ErrorKind::MalformedTriple, "triple names an unknown process or situation");
  }
  if (s->second.founded_on != tm.process) {
    throw Error(ErrorKind::MalformedTriple, tm.situation + " is not founded on " + tm.process);
  }
  if (!s->second.contains(tm.fact)) {
    throw Error(ErrorKind::MalformedTriple,
                tm.fact.str() + " is not a constituent of " + tm.situation);
  }
  return matches_form(tm.fact, phi) && matches_time(s->second, phi.when);
}

std::vector<TruthMakerTriple> find_truthmakers(const Model& m, const Proposition& phi) {
  std::vector<TruthMakerTriple> out;
  for (const auto& [sid, s] : m.situations) {
    if (!s.founded_on || !m.processes.count(*s.founded_on)) continue;
    for (const auto& f : s.constituents) {
      TruthMakerTriple tm{*s.founded_on, sid, f};
      if (satisfies(tm, phi, m)) out.push_back(std::move(tm));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_propositional_property(const std::string& process, const Proposition& phi,
                                const Model& m) {
  m.process(process);
  auto all = find_truthmakers(m, phi);
  return std::any_of(all.begin(), all.end(),
                     [&](const TruthMakerTriple& tm) { return tm.process == process; });
}

PropertySupportClass classify_property_support(const std::string& property, const Process&,
                                               const Model& m) {
  const auto& def = m.property(property);
  if (std::holds_alternative<IsolatedSupport>(def.support)) {
    return PropertySupportClass::PresenticIsolated;
  }
  if (std::holds_alternative<NonIsolatedSupport>(def.support)) {
    return PropertySupportClass::PresenticNonIsolated;
  }
  return PropertySupportClass::Global;
}

bool functional_property(const Process& p, const FunctionSpec& f, const Model& m) {
  return is_actual_realization(p, f, m).has_value();
}

}  // namespace gfo

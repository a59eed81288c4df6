#include "gfo/report.hpp"

namespace gfo::report {

namespace {

json samples(const SampleMap& s) {
  json out = json::array();
  for (const auto& [t, id] : s) out.push_back({t.str(), id});
  return out;
}

json constraint(const ValueConstraint& c) {
  json out{{"op", std::string(to_string(c.op))}};
  if (c.op == CompareOp::Defined) out["op"] = "defined";
  if (c.value) out["value"] = to_json(*c.value);
  return out;
}

json concept_json(const SituationConcept& c) {
  json facts = json::array();
  for (const auto& p : c.required_facts) {
    json pj{{"relator", p.relator}, {"args", p.args}};
    if (p.value) pj["value"] = constraint(*p.value);
    facts.push_back(std::move(pj));
  }
  json props = json::array();
  for (const auto& r : c.required_props) {
    props.push_back({{"entity", r.entity}, {"property", r.property},
                     {"constraint", constraint(r.constraint)}});
  }
  return {{"name", c.name}, {"facts", facts}, {"properties", props}};
}

json boundary(const TimeBoundary& b) {
  return {{"chronoid", b.owner}, {"coordinate", b.coordinate.str()}, {"id", b.id}};
}

}  // namespace

json to_json(const Value& v) { return format_value(v); }

json to_json(const Fact& f) {
  json out{{"relator", f.relator}, {"args", f.args}};
  if (f.value) out["value"] = to_json(*f.value);
  if (!f.name.empty()) out["name"] = f.name;
  return out;
}

json to_json(const Violation& v) {
  json out{{"axiom", v.axiom},
           {"subjects", v.subjects},
           {"message", v.message},
           {"severity", std::string(to_string(v.severity))}};
  if (v.at) out["at"] = v.at->str();
  return out;
}

json to_json(const IntegrationWitness& w) {
  json matched = json::array();
  for (const auto& t : w.matched_samples) matched.push_back(t.str());
  return {{"continuant", w.continuant}, {"process", w.process}, {"matched_samples", matched}};
}

json to_json(const TruthMakerTriple& tm) {
  return {{"process", tm.process}, {"situation", tm.situation}, {"fact", to_json(tm.fact)}};
}

json to_json(const RealizationRecord& r) {
  return {{"process", r.process},
          {"requirement_situation", r.requirement_situation},
          {"goal_situation", r.goal_situation}};
}

json to_json(const ContinuantChange& c) {
  return {{"from", c.from.str()},
          {"to", c.to.str()},
          {"property", c.property},
          {"before", c.before ? to_json(*c.before) : json(nullptr)},
          {"after", c.after ? to_json(*c.after) : json(nullptr)}};
}

json to_json(const dsl::ParseDiagnostic& d) {
  return {{"file", d.span.file},     {"line", d.span.line}, {"column", d.span.column},
          {"length", d.span.length}, {"code", d.code},      {"message", d.message}};
}

json dump(const Model& m) {
  json out = json::object();

  json props = json::object();
  for (const auto& [name, p] : m.properties) {
    json pj;
    if (const auto* cat = std::get_if<CategoricalDomain>(&p.domain)) {
      pj["domain"] = {{"categorical", cat->symbols}};
    } else {
      pj["domain"] = "numeric";
    }
    if (std::holds_alternative<IsolatedSupport>(p.support)) {
      pj["support"] = "isolated";
    } else if (const auto* ni = std::get_if<NonIsolatedSupport>(&p.support)) {
      pj["support"] = {{"non-isolated", format_rational(ni->window_radius)}};
    } else {
      pj["support"] = "global";
    }
    props[name] = std::move(pj);
  }
  out["properties"] = std::move(props);

  json chronoids = json::object();
  for (const auto& [id, c] : m.chronoids) {
    chronoids[id] = {{"left", c.left.str()}, {"right", c.right.str()}};
  }
  out["chronoids"] = std::move(chronoids);

  json presentials = json::object();
  for (const auto& [id, p] : m.presentials) {
    json val = json::object();
    for (const auto& [k, v] : p.valuation) val[k] = to_json(v);
    presentials[id] = {{"at", boundary(p.at)}, {"material", p.material}, {"valuation", val}};
  }
  out["presentials"] = std::move(presentials);

  json processes = json::object();
  for (const auto& [id, p] : m.processes) {
    json traj = json::object();
    for (const auto& [prop, samples_of] : p.trajectories) {
      json arr = json::array();
      for (const auto& [t, v] : samples_of) arr.push_back({t.str(), to_json(v)});
      traj[prop] = std::move(arr);
    }
    processes[id] = {{"extent", p.extent.id}, {"boundaries", samples(p.boundaries)},
                     {"trajectories", traj}};
  }
  out["processes"] = std::move(processes);

  json continuants = json::object();
  for (const auto& [id, c] : m.continuants) {
    continuants[id] = {{"lifetime", c.lifetime.id}, {"exhibits", samples(c.exhibits)},
                       {"material", c.material}};
  }
  out["continuants"] = std::move(continuants);

  json situations = json::object();
  for (const auto& [id, s] : m.situations) {
    json sj;
    if (const auto* b = std::get_if<TimeBoundary>(&s.extent)) {
      sj["at"] = boundary(*b);
    } else {
      sj["during"] = std::get<Chronoid>(s.extent).id;
    }
    json facts = json::array();
    for (const auto& f : s.constituents) facts.push_back(to_json(f));
    sj["facts"] = std::move(facts);
    sj["participants"] = s.participants;
    sj["founded_on"] = s.founded_on ? json(*s.founded_on) : json(nullptr);
    situations[id] = std::move(sj);
  }
  out["situations"] = std::move(situations);

  json functions = json::object();
  for (const auto& [id, f] : m.functions) {
    json fitem = json::array();
    for (const auto& i : f.fitem) {
      fitem.push_back({{"property", i.property}, {"constraint", constraint(i.constraint)}});
    }
    functions[id] = {{"labels", f.labels},
                     {"kind", std::string(to_string(f.kind))},
                     {"bearer", f.bearer ? json(*f.bearer) : json(nullptr)},
                     {"requires", concept_json(f.req)},
                     {"goal", concept_json(f.goal)},
                     {"fitem", fitem}};
  }
  out["functions"] = std::move(functions);

  json exe = json::array();
  for (const auto& [x, p] : m.exe) exe.push_back({x, p});
  out["exe"] = std::move(exe);
  out["requirement_instances"] = m.requirement_instances;
  out["goal_instances"] = m.goal_instances;
  return out;
}

}  // namespace gfo::report

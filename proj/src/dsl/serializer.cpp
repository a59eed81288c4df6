#include <algorithm>
#include <sstream>

#include "gfo/dsl.hpp"

namespace gfo::dsl {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

std::string constraint_text(const ValueConstraint& c) {
  if (c.op == CompareOp::Defined) return "= _";
  return std::string(to_string(c.op)) + " " + format_value(*c.value);
}

std::string boundary_text(const TimeBoundary& b) { return b.owner + "@" + b.coordinate.str(); }

std::string pattern_key(const FactPattern& p) { return p.str(); }
std::string requirement_key(const PropertyRequirement& r) {
  return r.entity + "." + r.property + " " + constraint_text(r.constraint);
}
std::string item_key(const ItemConstraint& i) {
  return i.property + " " + constraint_text(i.constraint);
}

template <class T, class Key>
void sort_by(std::vector<T>& xs, Key key) {
  std::sort(xs.begin(), xs.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

void write_concept(std::ostream& os, std::string_view keyword, const SituationConcept& c) {
  os << "  " << keyword << " {\n";
  for (const auto& p : c.required_facts) {
    os << "    fact " << p.relator << "(" << join(p.args) << ")";
    if (p.value) os << " " << constraint_text(*p.value);
    os << ";\n";
  }
  for (const auto& r : c.required_props) {
    os << "    holds " << r.entity << "." << r.property << " " << constraint_text(r.constraint)
       << ";\n";
  }
  os << "  }\n";
}

}  // namespace

void canonicalize(Model& m) {
  for (auto& [_, s] : m.situations) {
    std::sort(s.constituents.begin(), s.constituents.end());
    s.constituents.erase(std::unique(s.constituents.begin(), s.constituents.end()),
                         s.constituents.end());
  }
  for (auto& [_, f] : m.functions) {
    for (auto* c : {&f.req, &f.goal}) {
      sort_by(c->required_facts, pattern_key);
      sort_by(c->required_props, requirement_key);
    }
    sort_by(f.fitem, item_key);
  }
}

std::string serialize(const Model& input) {
  Model m = input;
  canonicalize(m);
  std::ostringstream os;

  for (const auto& [name, p] : m.properties) {
    os << "property " << name << ": ";
    if (const auto* cat = std::get_if<CategoricalDomain>(&p.domain)) {
      os << "categorical {"
         << join(std::vector<std::string>(cat->symbols.begin(), cat->symbols.end())) << "}";
    } else {
      os << "numeric";
    }
    if (std::holds_alternative<IsolatedSupport>(p.support)) {
      os << " isolated";
    } else if (const auto* ni = std::get_if<NonIsolatedSupport>(&p.support)) {
      os << " non-isolated(" << format_rational(ni->window_radius) << ")";
    } else {
      os << " global";
    }
    os << ";\n";
  }

  for (const auto& [id, c] : m.chronoids) {
    os << "chronoid " << id << " = [" << c.left.str() << ", " << c.right.str() << "];\n";
  }

  for (const auto& [id, p] : m.presentials) {
    if (!p.material) os << "immaterial ";
    os << "presential " << id << " at " << boundary_text(p.at);
    if (p.valuation.empty()) {
      os << ";\n";
      continue;
    }
    os << " {";
    for (const auto& [prop, v] : p.valuation) os << " " << prop << " = " << format_value(v) << ";";
    os << " }\n";
  }

  for (const auto& [id, p] : m.processes) {
    os << "process " << id << " extent " << p.extent.id << " {\n";
    for (const auto& [t, pid] : p.boundaries) os << "  boundary " << t.str() << " -> " << pid << ";\n";
    for (const auto& [prop, traj] : p.trajectories) {
      os << "  trajectory " << prop << " {";
      for (const auto& [t, v] : traj) os << " " << t.str() << ": " << format_value(v) << ";";
      os << " }\n";
    }
    os << "}\n";
  }

  for (const auto& [id, c] : m.continuants) {
    if (!c.material) os << "immaterial ";
    os << "continuant " << id << " lifetime " << c.lifetime.id << " {\n";
    for (const auto& [t, pid] : c.exhibits) os << "  exhibits " << t.str() << " -> " << pid << ";\n";
    os << "}\n";
  }

  for (const auto& [id, s] : m.situations) {
    os << "situation " << id;
    if (const auto* b = std::get_if<TimeBoundary>(&s.extent)) {
      os << " at " << boundary_text(*b);
    } else {
      os << " during " << std::get<Chronoid>(s.extent).id;
    }
    if (s.founded_on) os << " founded-on " << *s.founded_on;
    if (s.participants.empty() && s.constituents.empty()) {
      os << ";\n";
      continue;
    }
    os << " {\n";
    if (!s.participants.empty()) {
      os << "  participants "
         << join(std::vector<std::string>(s.participants.begin(), s.participants.end())) << ";\n";
    }
    for (const auto& f : s.constituents) {
      os << "  fact ";
      if (!f.name.empty()) os << f.name << ": ";
      os << f.relator << "(" << join(f.args) << ")";
      if (f.value) os << " = " << format_value(*f.value);
      os << ";\n";
    }
    os << "}\n";
  }

  for (const auto& [id, f] : m.functions) {
    os << "function " << id << " {\n";
    for (const auto& label : f.labels) os << "  label " << quote(label) << ";\n";
    os << "  kind " << to_string(f.kind) << ";\n";
    if (f.bearer) os << "  bearer " << *f.bearer << ";\n";
    write_concept(os, "requires", f.req);
    write_concept(os, "goal", f.goal);
    if (!f.fitem.empty()) {
      os << "  fitem {\n";
      for (const auto& item : f.fitem) {
        os << "    " << item.property << " " << constraint_text(item.constraint) << ";\n";
      }
      os << "  }\n";
    }
    os << "}\n";
  }

  for (const auto& [x, p] : m.exe) os << "exe " << x << " " << p << ";\n";
  for (const auto& [f, sids] : m.requirement_instances) {
    for (const auto& s : sids) os << "requirement-instance " << f << " " << s << ";\n";
  }
  for (const auto& [f, sids] : m.goal_instances) {
    for (const auto& s : sids) os << "goal-instance " << f << " " << s << ";\n";
  }
  return os.str();
}

}  // namespace gfo::dsl

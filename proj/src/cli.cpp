#include "gfo/cli.hpp"

#include <fstream>
#include <sstream>

#include "gfo/dsl.hpp"
#include "gfo/functions.hpp"
#include "gfo/report.hpp"
#include "gfo/truthmakers.hpp"

namespace gfo::cli {

using report::json;

int QuerySpec::count() const {
  return int(truthmakers.has_value()) + int(realizers.has_value()) +
         int(realizations.has_value()) + int(changes.has_value()) + int(classify.has_value());
}

namespace {

struct Loaded {
  std::optional<Model> model;
  std::vector<dsl::ParseDiagnostic> diagnostics;
  std::string io_error;
};

Loaded load(const std::string& path) {
  Loaded out;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    out.io_error = path + ": cannot read file";
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto parsed = dsl::parse(buf.str(), path);
  out.model = std::move(parsed.model);
  out.diagnostics = std::move(parsed.diagnostics);
  return out;
}

std::string paint(bool color, const char* ansi, const std::string& text) {
  if (!color) return text;
  return std::string("\x1b[") + ansi + "m" + text + "\x1b[0m";
}

RunResult load_failure(const RunConfig& cfg, const Loaded& l) {
  RunResult r;
  r.exit_code = kExitUsage;
  if (!l.io_error.empty()) {
    r.err = l.io_error + "\n";
    return r;
  }
  if (cfg.format == OutputFormat::Json) {
    json diags = json::array();
    for (const auto& d : l.diagnostics) diags.push_back(report::to_json(d));
    r.out = json{{"diagnostics", diags}}.dump(2) + "\n";
  }
  for (const auto& d : l.diagnostics) r.err += d.str() + "\n";
  return r;
}

json change_summary(const Model& m, const Rational& tol) {
  json continuants = json::object();
  for (const auto& [id, c] : m.continuants) {
    auto changes = detect_continuant_changes(m, c);
    if (changes.empty()) continue;
    json arr = json::array();
    for (const auto& ch : changes) arr.push_back(report::to_json(ch));
    continuants[id] = std::move(arr);
  }
  json processes = json::object();
  for (const auto& [id, p] : m.processes) {
    json per = json::object();
    for (const auto& [prop, _] : p.trajectories) {
      auto at = detect_process_changes(m, p, prop, tol);
      if (at.empty()) continue;
      json arr = json::array();
      for (const auto& t : at) arr.push_back(t.str());
      per[prop] = std::move(arr);
    }
    if (!per.empty()) processes[id] = std::move(per);
  }
  return {{"continuants", continuants}, {"processes", processes}};
}

json check_json(const std::string& file, const CheckReport& rep, const Rational& tol) {
  json violations = json::array();
  for (const auto& v : rep.violations) violations.push_back(report::to_json(v));
  json witnesses = json::array();
  for (const auto& w : rep.witnesses) witnesses.push_back(report::to_json(w));
  std::size_t errors = rep.error_count();
  return {{"file", file},
          {"violations", violations},
          {"integrated", witnesses},
          {"derived", rep.derived},
          {"changes", change_summary(rep.checked, tol)},
          {"summary",
           {{"violations", rep.violations.size()},
            {"errors", errors},
            {"warnings", rep.violations.size() - errors},
            {"entities", rep.checked.entity_count()},
            {"samples", rep.checked.sample_count()}}}};
}

std::string check_human(const std::string& file, const CheckReport& rep, bool color) {
  std::ostringstream os;
  os << file << ": " << rep.violations.size() << " violations, " << rep.checked.entity_count()
     << " entities, " << rep.checked.sample_count() << " samples\n";
  for (const auto& id : rep.derived) os << "  derived process " << id << "\n";
  for (const auto& v : rep.violations) {
    bool err = v.severity == Severity::Error;
    os << "  " << paint(color, err ? "31" : "33", std::string(to_string(v.severity))) << " "
       << v.axiom << " [";
    for (std::size_t i = 0; i < v.subjects.size(); ++i) os << (i ? ", " : "") << v.subjects[i];
    os << "]";
    if (v.at) os << " at " << v.at->str();
    os << ": " << v.message << "\n";
  }
  return os.str();
}

RunResult usage(const std::string& message) { return {"", message + "\n", kExitUsage}; }

}  // namespace

RunResult run_check(const RunConfig& cfg) {
  if (cfg.inputs.empty()) return usage("check: at least one input file is required");
  if (cfg.tolerance < 0) return usage("check: tolerance must be non-negative");
  RunResult result;
  json reports = json::array();
  for (const auto& path : cfg.inputs) {
    auto loaded = load(path);
    if (!loaded.model) {
      auto failure = load_failure(cfg, loaded);
      // A load failure in any file makes the whole run a load failure.
      return failure;
    }
    CheckOptions opts{cfg.complete, cfg.integration};
    auto rep = run_checks(*loaded.model, opts);
    if (rep.error_count() > 0) result.exit_code = kExitViolations;
    if (cfg.format == OutputFormat::Json) {
      reports.push_back(check_json(path, rep, cfg.tolerance));
    } else {
      result.out += check_human(path, rep, cfg.color);
    }
  }
  if (cfg.format == OutputFormat::Json) {
    result.out = (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n";
  }
  return result;
}

RunResult run_query(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) return usage("query: exactly one input file is required");
  if (cfg.query.count() != 1) {
    return usage(
        "query: give exactly one of --truthmakers, --realizers, --realizations, --changes, "
        "--classify");
  }
  auto loaded = load(cfg.inputs.front());
  if (!loaded.model) return load_failure(cfg, loaded);
  const Model& m = *loaded.model;
  const auto& q = cfg.query;
  json out;
  try {
    if (q.truthmakers) {
      auto parsed = dsl::parse_proposition(*q.truthmakers);
      if (!parsed.proposition) {
        RunResult r{"", "", kExitUsage};
        for (const auto& d : parsed.diagnostics) r.err += d.str() + "\n";
        return r;
      }
      out = json::array();
      for (const auto& tm : find_truthmakers(m, *parsed.proposition)) {
        out.push_back(report::to_json(tm));
      }
    } else if (q.realizers) {
      out = realizers(m.function(*q.realizers), m);
    } else if (q.realizations) {
      out = json::array();
      for (const auto& r : realizations(m.function(*q.realizations), m)) {
        out.push_back(report::to_json(r));
      }
    } else if (q.changes) {
      out = json::array();
      if (auto c = m.continuants.find(*q.changes); c != m.continuants.end()) {
        for (const auto& ch : detect_continuant_changes(m, c->second)) {
          out.push_back(report::to_json(ch));
        }
      } else if (auto p = m.processes.find(*q.changes); p != m.processes.end()) {
        for (const auto& [prop, _] : p->second.trajectories) {
          for (const auto& t : detect_process_changes(m, p->second, prop, cfg.tolerance)) {
            out.push_back({{"property", prop}, {"at", t.str()}});
          }
        }
      } else {
        return usage("query: '" + *q.changes + "' is neither a continuant nor a process");
      }
    } else {
      const auto& [prop, proc] = *q.classify;
      auto cls = classify_property_support(prop, m.process(proc), m);
      out = {{"property", prop}, {"process", proc}, {"support", std::string(to_string(cls))}};
    }
  } catch (const Error& e) {
    return usage(std::string("query: ") + e.what());
  }
  RunResult r;
  if (cfg.format == OutputFormat::Human && out.is_array()) {
    for (const auto& item : out) r.out += item.dump() + "\n";
  } else {
    r.out = out.dump(2) + "\n";
  }
  return r;
}

RunResult run_dump(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) return usage("dump: exactly one input file is required");
  auto loaded = load(cfg.inputs.front());
  if (!loaded.model) return load_failure(cfg, loaded);
  return {report::dump(*loaded.model).dump(2) + "\n", "", kExitClean};
}

RunResult run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Check: return run_check(cfg);
    case Command::Query: return run_query(cfg);
    case Command::Dump: return run_dump(cfg);
  }
  return usage("unknown command");
}

}  // namespace gfo::cli

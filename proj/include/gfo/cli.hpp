#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfo/checker.hpp"

namespace gfo::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Check, Query, Dump };
enum class OutputFormat { Human, Json };

struct QuerySpec {
  std::optional<std::string> truthmakers;  // proposition text
  std::optional<std::string> realizers;    // function id
  std::optional<std::string> realizations; // function id
  std::optional<std::string> changes;      // entity id
  std::optional<std::pair<std::string, std::string>> classify;  // property, process

  int count() const;
};

struct RunConfig {
  Command command = Command::Check;
  std::vector<std::string> inputs;
  bool complete = false;
  IntegrationMode integration = IntegrationMode::Identity;
  Rational tolerance = 0;
  OutputFormat format = OutputFormat::Human;
  bool color = false;
  QuerySpec query;
};

struct RunResult {
  std::string out;  // stdout
  std::string err;  // stderr
  int exit_code = kExitClean;
};

/// Parses and checks every input; exit 0 iff no error-severity violation.
RunResult run_check(const RunConfig& cfg);

/// Answers exactly one query against a single input; JSON arrays in
/// canonical order. Exit 0 even for empty results, 2 on bad queries.
RunResult run_query(const RunConfig& cfg);

/// Canonical JSON store of a single input.
RunResult run_dump(const RunConfig& cfg);

RunResult run(const RunConfig& cfg);

}  // namespace gfo::cli

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gfo/model.hpp"
#include "gfo/truthmakers.hpp"

namespace gfo::dsl {

/// 1-based line and column (in bytes), length >= 1.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

namespace code {
inline constexpr std::string_view kUnexpectedToken = "unexpected-token";
inline constexpr std::string_view kUnknownId = "unknown-id";
inline constexpr std::string_view kDuplicateId = "duplicate-id";
inline constexpr std::string_view kBadRational = "bad-rational";
inline constexpr std::string_view kDanglingReference = "dangling-reference";
inline constexpr std::string_view kKindConflict = "kind-conflict";
}  // namespace code

const std::vector<std::string_view>& diagnostic_codes();

struct ParseDiagnostic {
  SourceSpan span;
  std::string code;
  std::string message;

  /// `file:line:col: code: message`
  std::string str() const;
};

struct ParseResult {
  std::optional<Model> model;  // set iff there are no diagnostics
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Parses a `.gfo` source. Declarations may reference each other in any
/// order; a model is returned only when every check passes.
ParseResult parse(std::string_view source, std::string file = "<input>");

struct PropositionResult {
  std::optional<Proposition> proposition;
  std::vector<ParseDiagnostic> diagnostics;
};

/// Parses a query proposition such as `fact drinks(John, beer) during [0,10]`
/// or `holds(ball, color, red) at 3/2`. A trailing `;` is optional.
PropositionResult parse_proposition(std::string_view text);

/// Canonical text: declarations grouped by kind and sorted by id, maps in
/// time order, rationals in lowest terms.
std::string serialize(const Model& m);

/// Sorts the order-insensitive sequences of a model (concept constraints,
/// functional items, situation facts) into their canonical order.
void canonicalize(Model& m);

}  // namespace gfo::dsl

#pragma once

#include <nlohmann/json.hpp>

#include "gfo/checker.hpp"
#include "gfo/dsl.hpp"
#include "gfo/functions.hpp"
#include "gfo/truthmakers.hpp"

// JSON views of the store and of check/query results. Objects use
// nlohmann::json's sorted keys, so dumps are byte-stable; rationals are
// rendered as canonical strings ("1/2") to stay exact.
namespace gfo::report {

using nlohmann::json;

json to_json(const Value& v);
json to_json(const Fact& f);
json to_json(const Violation& v);
json to_json(const IntegrationWitness& w);
json to_json(const TruthMakerTriple& tm);
json to_json(const RealizationRecord& r);
json to_json(const ContinuantChange& c);
json to_json(const dsl::ParseDiagnostic& d);

/// Canonical JSON dump of the whole store.
json dump(const Model& m);

}  // namespace gfo::report

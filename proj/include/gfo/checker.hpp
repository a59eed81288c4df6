#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gfo/model.hpp"

namespace gfo {

namespace axiom {
inline constexpr std::string_view kDisjointness = "disjointness";
inline constexpr std::string_view kIntegration = "integration";
inline constexpr std::string_view kIntegrationNoProcess = "integration-no-process";
inline constexpr std::string_view kPresentialDependence = "presential-dependence";
inline constexpr std::string_view kRequirementInstance = "requirement-instance";
}  // namespace axiom

/// Names accepted in Violation::axiom.
const std::vector<std::string_view>& registered_axioms();

enum class Severity { Error, Warning };

std::string_view to_string(Severity s);

struct Violation {
  std::string axiom;
  std::vector<std::string> subjects;
  std::optional<TimeCoordinate> at;
  std::string message;
  Severity severity = Severity::Error;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Canonical order: axiom, then subjects, then time (absent first).
bool canonical_less(const Violation& a, const Violation& b);
void sort_canonical(std::vector<Violation>& vs);

struct IntegrationWitness {
  std::string continuant;
  std::string process;
  std::vector<TimeCoordinate> matched_samples;

  friend bool operator==(const IntegrationWitness&, const IntegrationWitness&) = default;
};

/// How the boundaries of a process have to agree with a continuant's
/// snapshots: the very same presential, or a presential with an equal
/// valuation at the same coordinate.
enum class IntegrationMode { Identity, Valuation };

using IntegrationResult = std::variant<IntegrationWitness, std::vector<Violation>>;

std::vector<Violation> check_disjointness(const Model& m);

/// Looks for a process P with tempext(P) = lft(C) whose boundaries coincide
/// with C's snapshots at every sample. On success the witness names the
/// smallest such P; otherwise the violations describe the closest candidate.
IntegrationResult check_integration(const Model& m, const Continuant& c,
                                    IntegrationMode mode = IntegrationMode::Identity);

/// Fresh process whose extent and boundary map copy `c`'s lifetime and
/// exhibits. The id is `<c>-process` (suffixed `-2`, `-3`, ... when taken).
/// Throws Error(MalformedContinuant) when a lifetime endpoint is unsampled.
Process derive_process(const Model& m, const Continuant& c);

/// Returns a copy of `m` with a derived process for every material
/// continuant that fails integration; `derived` receives the new ids.
Model complete_model(const Model& m, IntegrationMode mode = IntegrationMode::Identity,
                     std::vector<std::string>* derived = nullptr);

/// Every material presential must be a boundary of some process.
std::vector<Violation> check_presential_dependence(const Model& m);

struct ContinuantChange {
  TimeCoordinate from;
  TimeCoordinate to;
  std::string property;
  std::optional<Value> before;  // nullopt = undefined
  std::optional<Value> after;

  friend bool operator==(const ContinuantChange&, const ContinuantChange&) = default;
};

std::vector<ContinuantChange> detect_continuant_changes(const Model& m, const Continuant& c);

/// Midpoints between consecutive trajectory samples whose values differ
/// (numeric: by more than `tolerance`). Throws Error(UnknownProperty) when
/// `property` is undefined or has no trajectory on `p`.
std::vector<TimeCoordinate> detect_process_changes(const Model& m, const Process& p,
                                                   const std::string& property,
                                                   const Rational& tolerance = 0);

/// Registered requirement instances that do not satisfy the function's
/// requirement concept (warnings).
std::vector<Violation> check_requirement_instances(const Model& m);

struct CheckOptions {
  bool complete = false;
  IntegrationMode mode = IntegrationMode::Identity;
};

struct CheckReport {
  std::vector<Violation> violations;      // canonical order
  std::vector<std::string> derived;       // processes added by completion
  std::vector<IntegrationWitness> witnesses;
  Model checked;                          // the model after completion

  std::size_t error_count() const;
};

/// Runs every axiom check over `m` and merges the results canonically.
CheckReport run_checks(const Model& m, const CheckOptions& opts = {});

}  // namespace gfo

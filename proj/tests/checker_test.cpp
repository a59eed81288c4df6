#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "gfo/checker.hpp"
#include "oracles.hpp"

using namespace gfo;
using gfo::testing::load_corpus;
using gfo::testing::parse_ok;

namespace {

std::vector<Violation> violations(const IntegrationResult& r) {
  if (const auto* v = std::get_if<std::vector<Violation>>(&r)) return *v;
  return {};
}

const char* kJohnTwoSamples = R"(
  chronoid c = [0, 2];
  presential m0 at c@0 { size = 1; }
  presential m1 at c@1 { size = 2; }
  presential m2 at c@2 { size = 3; }
  property size: numeric isolated;
  continuant John lifetime c {
    exhibits 0 -> m0;
    exhibits 1 -> m1;
    exhibits 2 -> m2;
  }
)";

}  // namespace

TEST(Integration, ContinuantWithoutProcess) {
  auto m = load_corpus("john_missing_process.gfo");
  const auto& john = m.continuant("John");
  auto vs = violations(check_integration(m, john));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].axiom, axiom::kIntegrationNoProcess);
  EXPECT_EQ(vs[0].subjects, std::vector<std::string>{"John"});
  EXPECT_EQ(vs[0].severity, Severity::Error);

  auto oracle = gfo::testing::integration_oracle(m, john);
  EXPECT_FALSE(oracle.witness);
  EXPECT_FALSE(oracle.has_candidate);
}

TEST(Integration, DerivedProcessIntegrates) {
  auto m = load_corpus("john_missing_process.gfo");
  auto p = derive_process(m, m.continuant("John"));
  EXPECT_EQ(p.id, "John-process");
  EXPECT_EQ(p.boundaries, m.continuant("John").exhibits);
  EXPECT_EQ(p.extent, m.continuant("John").lifetime);
  m.add_process(p);
  auto r = check_integration(m, m.continuant("John"));
  ASSERT_TRUE(std::holds_alternative<IntegrationWitness>(r));
  EXPECT_EQ(std::get<IntegrationWitness>(r).process, "John-process");
  EXPECT_EQ(std::get<IntegrationWitness>(r).matched_samples.size(), 3u);
}

TEST(Integration, DeriveTwiceGivesFreshId) {
  auto m = load_corpus("john_missing_process.gfo");
  m.add_process(derive_process(m, m.continuant("John")));
  auto second = derive_process(m, m.continuant("John"));
  EXPECT_EQ(second.id, "John-process-2");
  m.add_process(second);
  EXPECT_EQ(derive_process(m, m.continuant("John")).id, "John-process-3");
  EXPECT_EQ(std::get<IntegrationWitness>(check_integration(m, m.continuant("John"))).process,
            "John-process");
}

TEST(Integration, DeriveNeedsBothEndpoints) {
  Model m;
  auto ch = make_chronoid(0, 2, "c");
  Continuant c{"c1", ch, {{0, "a"}}, true};
  EXPECT_THROW(derive_process(m, c), Error);
  try {
    derive_process(m, c);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedContinuant);
  }
}

TEST(Integration, MutatedBoundaryGivesOneViolationAtThatTime) {
  auto m = load_corpus("john_missing_process.gfo");
  auto p = derive_process(m, m.continuant("John"));
  Presential other{"other", inner_boundary(m.chronoids.at("c"), 1), {}, true};
  m.presentials.emplace(other.id, other);
  p.boundaries[1] = "other";
  m.add_process(p);
  auto vs = violations(check_integration(m, m.continuant("John")));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].axiom, axiom::kIntegration);
  EXPECT_EQ(vs[0].at, TimeCoordinate(1));
  EXPECT_EQ(vs[0].subjects, (std::vector<std::string>{"John", "John-process"}));
}

TEST(Integration, LifetimeMismatchHasNoTime) {
  auto m = load_corpus("john_missing_process.gfo");
  auto p = derive_process(m, m.continuant("John"));
  p.extent = make_chronoid(0, 3, "longer");
  m.add_process(p);
  auto vs = violations(check_integration(m, m.continuant("John")));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_FALSE(vs[0].at);
}

TEST(Integration, ValuationModeAcceptsEqualSnapshots) {
  auto m = parse_ok(std::string(kJohnTwoSamples) + R"(
    presential n0 at c@0 { size = 1; }
    presential n1 at c@1 { size = 2; }
    presential n2 at c@2 { size = 3; }
    process twin extent c { boundary 0 -> n0; boundary 1 -> n1; boundary 2 -> n2; }
  )");
  const auto& john = m.continuant("John");
  EXPECT_FALSE(std::holds_alternative<IntegrationWitness>(check_integration(m, john)));
  auto r = check_integration(m, john, IntegrationMode::Valuation);
  ASSERT_TRUE(std::holds_alternative<IntegrationWitness>(r));
  EXPECT_EQ(std::get<IntegrationWitness>(r).process, "twin");
}

TEST(Integration, AgreesWithOracleOnRandomModels) {
  gfo::testing::Rng rng(11);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto m = gfo::testing::random_model(rng);
    for (const auto& [id, c] : m.continuants) {
      auto r = check_integration(m, c);
      auto oracle = gfo::testing::integration_oracle(m, c);
      if (oracle.witness) {
        ASSERT_TRUE(std::holds_alternative<IntegrationWitness>(r)) << id;
        EXPECT_EQ(std::get<IntegrationWitness>(r).process, *oracle.witness);
      } else {
        auto vs = violations(r);
        ASSERT_FALSE(vs.empty());
        bool no_process = vs.size() == 1 && vs[0].axiom == axiom::kIntegrationNoProcess;
        EXPECT_EQ(no_process, !oracle.has_candidate);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Complete, DerivesOnlyForMissingProcesses) {
  auto m = load_corpus("john_missing_process.gfo");
  auto report = run_checks(m, {.complete = true});
  EXPECT_EQ(report.derived, std::vector<std::string>{"John-process"});
  EXPECT_EQ(report.error_count(), 0u);
  auto again = run_checks(report.checked, {.complete = true});
  EXPECT_TRUE(again.derived.empty());
}

TEST(Complete, SkipsImmaterialContinuants) {
  auto report = run_checks(load_corpus("immaterial.gfo"), {.complete = true});
  EXPECT_TRUE(report.derived.empty());
  EXPECT_TRUE(report.violations.empty());
}

TEST(Disjointness, FlagsIdUnderTwoKinds) {
  auto m = load_corpus("john_missing_process.gfo");
  Process p{"John", m.chronoids.at("c"), m.continuant("John").exhibits, {}};
  m.processes.emplace("John", p);
  auto vs = check_disjointness(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].subjects, std::vector<std::string>{"John"});
  EXPECT_EQ(vs[0].axiom, axiom::kDisjointness);
}

TEST(PresentialDependence, OrphanMaterialPresentialsOnly) {
  auto m = parse_ok(R"(
    chronoid c = [0, 1];
    presential a at c@0;
    presential b at c@1;
    presential lone at c@1;
    immaterial presential ghost at c@0;
    process P extent c { boundary 0 -> a; boundary 1 -> b; }
  )");
  auto vs = check_presential_dependence(m);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].subjects, std::vector<std::string>{"lone"});
  EXPECT_EQ(vs[0].at, TimeCoordinate(1));
}

TEST(Report, CanonicalOrderIsStableAndDeduplicated) {
  Violation a{"integration", {"b"}, TimeCoordinate(2), "x", Severity::Error};
  Violation b{"integration", {"b"}, TimeCoordinate(1), "x", Severity::Error};
  Violation c{"disjointness", {"z"}, std::nullopt, "y", Severity::Error};
  Violation d{"integration", {"a"}, std::nullopt, "x", Severity::Error};
  std::vector<Violation> vs{a, b, c, d, a};
  sort_canonical(vs);
  ASSERT_EQ(vs.size(), 4u);
  EXPECT_EQ(vs[0], c);
  EXPECT_EQ(vs[1], d);
  EXPECT_EQ(vs[2], b);
  EXPECT_EQ(vs[3], a);
  auto copy = vs;
  std::reverse(copy.begin(), copy.end());
  sort_canonical(copy);
  EXPECT_EQ(copy, vs);
}

TEST(Report, RunChecksIsDeterministic) {
  gfo::testing::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto m = gfo::testing::random_model(rng);
    auto a = run_checks(m, {});
    auto b = run_checks(m, {});
    EXPECT_EQ(a.violations, b.violations);
    EXPECT_TRUE(std::is_sorted(a.violations.begin(), a.violations.end(), canonical_less));
  }
}

TEST(Report, RequirementInstanceMismatchIsAWarning) {
  auto m = load_corpus("heart.gfo");
  m.requirement_instances["f_pump"].insert("s_goal");
  auto report = run_checks(m, {});
  auto it = std::find_if(report.violations.begin(), report.violations.end(),
                         [](const Violation& v) { return v.axiom == axiom::kRequirementInstance; });
  ASSERT_NE(it, report.violations.end());
  EXPECT_EQ(it->severity, Severity::Warning);
  EXPECT_EQ(it->subjects, (std::vector<std::string>{"f_pump", "s_goal"}));
  EXPECT_EQ(report.error_count(), 0u);
}

namespace {

// Reference diff: compare every property present on either side.
std::vector<ContinuantChange> changes_oracle(const Model& m, const Continuant& c) {
  std::vector<std::pair<TimeCoordinate, Valuation>> snaps;
  for (const auto& [t, id] : c.exhibits) snaps.emplace_back(t, m.presentials.at(id).valuation);
  std::vector<ContinuantChange> out;
  for (std::size_t i = 0; i + 1 < snaps.size(); ++i) {
    Valuation both = snaps[i].second;
    both.insert(snaps[i + 1].second.begin(), snaps[i + 1].second.end());
    for (const auto& [prop, _] : both) {
      auto get = [&](const Valuation& v) -> std::optional<Value> {
        return v.count(prop) ? std::optional<Value>(v.at(prop)) : std::nullopt;
      };
      auto before = get(snaps[i].second);
      auto after = get(snaps[i + 1].second);
      if (before != after) out.push_back({snaps[i].first, snaps[i + 1].first, prop, before, after});
    }
  }
  return out;
}

}  // namespace

TEST(Changes, ContinuantColorChangeAndUndefinedProperty) {
  auto m = load_corpus("ball_color_change.gfo");
  auto changes = detect_continuant_changes(m, m.continuant("ball"));
  ASSERT_EQ(changes.size(), 2u);
  EXPECT_EQ(changes[0].property, "color");
  EXPECT_EQ(changes[0].before, Value(Symbol{"red"}));
  EXPECT_EQ(changes[0].after, Value(Symbol{"blue"}));
  EXPECT_EQ(changes[1].property, "gloss");
  EXPECT_EQ(changes[1].before, Value(Symbol{"matte"}));
  EXPECT_FALSE(changes[1].after);

  auto expected = changes_oracle(m, m.continuant("ball"));
  ASSERT_EQ(expected.size(), changes.size());
  for (std::size_t i = 0; i < changes.size(); ++i) {
    EXPECT_EQ(changes[i].property, expected[i].property);
    EXPECT_EQ(changes[i].before, expected[i].before);
    EXPECT_EQ(changes[i].after, expected[i].after);
  }
}

TEST(Changes, ContinuantChangesMatchOracleOnRandomModels) {
  gfo::testing::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto m = gfo::testing::random_continuant_model(rng);
    const auto& c = m.continuant("c");
    auto got = detect_continuant_changes(m, c);
    auto want = changes_oracle(m, c);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t j = 0; j < got.size(); ++j) {
      EXPECT_EQ(got[j].from, want[j].from);
      EXPECT_EQ(got[j].property, want[j].property);
    }
  }
}

TEST(Changes, ProcessPhaseFlipAtMidpoint) {
  auto m = load_corpus("signal.gfo");
  const auto& p = m.process("signal");
  EXPECT_EQ(detect_process_changes(m, p, "phase", 0),
            std::vector<TimeCoordinate>{TimeCoordinate(7, 2)});
  EXPECT_EQ(detect_process_changes(m, p, "level", 0),
            (std::vector<TimeCoordinate>{TimeCoordinate(1, 2), TimeCoordinate(3, 2),
                                         TimeCoordinate(7, 2)}));
  EXPECT_EQ(detect_process_changes(m, p, "level", 2),
            std::vector<TimeCoordinate>{TimeCoordinate(7, 2)});
  EXPECT_EQ(detect_process_changes(m, p, "level", 5), std::vector<TimeCoordinate>{});
  EXPECT_THROW(detect_process_changes(m, p, "missing", 0), Error);
}

TEST(Changes, ConstantProcessHasNoChanges) {
  auto m = load_corpus("ball_motion.gfo");
  for (const auto& [id, p] : m.processes) {
    for (const auto& [prop, _] : p.trajectories) {
      if (prop == "color") {
        EXPECT_TRUE(detect_process_changes(m, p, prop, 0).empty());
      }
    }
  }
  EXPECT_TRUE(detect_continuant_changes(m, m.continuant("ball")).empty());
}

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "gfo/dsl.hpp"

using namespace gfo;
using gfo::testing::parse_ok;

namespace {

struct Case {
  std::string source;
  std::string_view code;
  std::string token;  // text the diagnostic should point at
};

std::string line_of(const std::string& source, int line) {
  std::istringstream in(source);
  std::string out;
  for (int i = 0; i < line && std::getline(in, out); ++i) {
  }
  return out;
}

}  // namespace

TEST(Parse, EveryCorpusFileParses) {
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(GFO_CORPUS_DIR)) {
    if (entry.path().extension() != ".gfo") continue;
    auto r = dsl::parse(gfo::testing::read_file(entry.path()), entry.path().string());
    EXPECT_TRUE(r.ok()) << entry.path() << ": "
                        << (r.diagnostics.empty() ? "" : r.diagnostics[0].str());
    ++n;
  }
  EXPECT_GE(n, 10);
}

TEST(Parse, RationalsAreNormalized) {
  auto m = parse_ok("chronoid c = [2/4, 0.75];\npresential a at c@0.5;\n");
  EXPECT_EQ(m.chronoids.at("c").left, TimeCoordinate(1, 2));
  EXPECT_EQ(m.chronoids.at("c").right, TimeCoordinate(3, 4));
  EXPECT_EQ(m.presentials.at("a").at.kind, BoundaryKind::Left);
  auto text = dsl::serialize(m);
  EXPECT_NE(text.find("[1/2, 3/4]"), std::string::npos);
  EXPECT_NE(text.find("c@1/2"), std::string::npos);
  EXPECT_EQ(dsl::serialize(parse_ok(text)), text);
}

TEST(Parse, DiagnosticsPointAtTheOffendingToken) {
  std::vector<Case> cases{
      {"chronoid c = [0, 1]\npresential a at c@0;\n", dsl::code::kUnexpectedToken, "presential"},
      {"chronoid c = [0, 1/0];\n", dsl::code::kBadRational, "1/0"},
      {"chronoid c = [5, 5];\n", dsl::code::kBadRational, "5"},
      {"chronoid c = [0, 1];\nchronoid c = [0, 2];\n", dsl::code::kDuplicateId, "c"},
      {"chronoid c = [0, 1];\npresential c at c@0;\n", dsl::code::kKindConflict, "c"},
      {"chronoid c = [0, 1];\npresential a at c@0 { mass = 3; }\n", dsl::code::kUnknownId, "mass"},
      {"chronoid c = [0, 1];\npresential a at c@0;\npresential b at c@1;\n"
       "continuant C lifetime c { exhibits 0 -> a; exhibits 1 -> ghost; }\n",
       dsl::code::kDanglingReference, "ghost"},
      {"chronoid c = [0, 1];\npresential a at c@3;\n", dsl::code::kBadRational, "3"},
      {"property color: categorical {red} isolated;\nchronoid c = [0, 1];\n"
       "presential a at c@0 { color = green; }\n",
       dsl::code::kUnknownId, "green"},
  };
  for (const auto& c : cases) {
    auto r = dsl::parse(c.source, "case.gfo");
    ASSERT_FALSE(r.ok()) << c.source;
    ASSERT_FALSE(r.diagnostics.empty());
    const auto& d = r.diagnostics.front();
    EXPECT_EQ(d.code, c.code) << c.source << "\n" << d.str();
    EXPECT_EQ(d.span.file, "case.gfo");
    auto line = line_of(c.source, d.span.line);
    ASSERT_GE(d.span.column, 1);
    ASSERT_LE(static_cast<std::size_t>(d.span.column - 1 + d.span.length), line.size())
        << d.str();
    EXPECT_EQ(line.substr(d.span.column - 1, d.span.length), c.token) << d.str();
    EXPECT_EQ(d.str().rfind("case.gfo:", 0), 0u);
  }
}

TEST(Parse, EveryDiagnosticCodeIsReachable) {
  std::set<std::string> seen;
  for (const auto* src : {
           "chronoid c [0, 1];",
           "chronoid c = [0, 1/0];",
           "chronoid c = [0, 1]; chronoid c = [0, 1];",
           "chronoid c = [0, 1]; process c extent c { }",
           "chronoid c = [0, 1]; presential a at c@0 { mass = 1; }",
           "exe x y;",
       }) {
    for (const auto& d : dsl::parse(src).diagnostics) seen.insert(d.code);
  }
  for (auto code : dsl::diagnostic_codes()) EXPECT_TRUE(seen.count(std::string(code))) << code;
}

TEST(Parse, NullaryFactsRoundTrip) {
  auto m = parse_ok("chronoid c = [0, 1];\nsituation s during c { fact raining(); }\n");
  EXPECT_TRUE(m.situation("s").constituents[0].args.empty());
  EXPECT_EQ(parse_ok(dsl::serialize(m)), m);
}

TEST(Parse, UnresolvedEndpointSampleIsReportedOnce) {
  auto r = dsl::parse(
      "chronoid c = [0, 1];\npresential a at c@0;\n"
      "continuant C lifetime c { exhibits 0 -> a; exhibits 1 -> ghost; }\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, dsl::code::kDanglingReference);
  auto missing = dsl::parse(
      "chronoid c = [0, 1];\npresential a at c@0;\ncontinuant C lifetime c { exhibits 0 -> a; }\n");
  ASSERT_EQ(missing.diagnostics.size(), 1u);
  EXPECT_EQ(missing.diagnostics[0].code, dsl::code::kBadRational);
}

TEST(Parse, RecoversAndReportsSeveralErrors) {
  auto r = dsl::parse("chronoid c = [0 1];\nchronoid d = [0, 1];\nbogus thing;\nexe a b;\n");
  ASSERT_GE(r.diagnostics.size(), 3u);
  EXPECT_TRUE(std::is_sorted(r.diagnostics.begin(), r.diagnostics.end(),
                             [](const auto& a, const auto& b) { return a.span.line < b.span.line; }));
}

TEST(Parse, LabelEscapesRoundTrip) {
  auto m = parse_ok(R"(
    chronoid c = [0, 1];
    presential a at c@0;
    function f {
      label "say \"hi\"\\ now\n";
      requires { fact r(a); }
      goal { fact s(_); }
    }
  )");
  EXPECT_EQ(*m.function("f").labels.begin(), "say \"hi\"\\ now\n");
  EXPECT_EQ(parse_ok(dsl::serialize(m)), m);
}

TEST(Parse, Propositions) {
  auto p = dsl::parse_proposition("holds(ball, color, red) at 1");
  ASSERT_TRUE(p.proposition);
  EXPECT_TRUE(std::holds_alternative<HoldsProp>(p.proposition->form));
  EXPECT_EQ(std::get<AtTime>(p.proposition->when).t, TimeCoordinate(1));
  auto q = dsl::parse_proposition("fact drinks(John, _) during [0, 5/2];");
  ASSERT_TRUE(q.proposition);
  EXPECT_EQ(std::get<During>(q.proposition->when).span.right, TimeCoordinate(5, 2));
  auto r = dsl::parse_proposition("holds(ball, speed, > 3)");
  ASSERT_TRUE(r.proposition);
  EXPECT_EQ(std::get<HoldsProp>(r.proposition->form).constraint.op, CompareOp::Gt);
  EXPECT_FALSE(dsl::parse_proposition("drinks(John)").proposition);
  EXPECT_FALSE(dsl::parse_proposition("fact drinks(John) at").proposition);
  EXPECT_FALSE(dsl::parse_proposition("fact drinks(John) during [3, 1]").proposition);
}

TEST(Serialize, RandomModelsRoundTrip) {
  gfo::testing::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    auto m = gfo::testing::random_model(rng);
    auto text = dsl::serialize(m);
    auto r = dsl::parse(text);
    ASSERT_TRUE(r.ok()) << text << "\n" << r.diagnostics.front().str();
    EXPECT_EQ(*r.model, m) << text;
    EXPECT_EQ(dsl::serialize(*r.model), text);
  }
}

TEST(Serialize, DeclarationOrderDoesNotMatter) {
  auto source = gfo::testing::read_file(gfo::testing::corpus_path("heart.gfo"));
  auto canonical = dsl::serialize(parse_ok(source));
  std::vector<std::string> statements;
  std::string current;
  std::istringstream in(canonical);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != ' ' && line[0] != '}' && !current.empty()) {
      statements.push_back(current);
      current.clear();
    }
    current += line + "\n";
  }
  statements.push_back(current);
  std::reverse(statements.begin(), statements.end());
  std::string reversed;
  for (const auto& s : statements) reversed += s;
  EXPECT_NE(reversed, canonical);
  EXPECT_EQ(dsl::serialize(parse_ok(reversed)), canonical);
}

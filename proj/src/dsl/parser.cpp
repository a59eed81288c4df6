#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "gfo/dsl.hpp"
#include "lexer.hpp"

namespace gfo::dsl {

using detail::Token;
using detail::TokenKind;

const std::vector<std::string_view>& diagnostic_codes() {
  static const std::vector<std::string_view> codes{
      code::kUnexpectedToken, code::kUnknownId,          code::kDuplicateId,
      code::kBadRational,     code::kDanglingReference, code::kKindConflict};
  return codes;
}

std::string ParseDiagnostic::str() const {
  return span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
         code + ": " + message;
}

namespace {

// ---------------------------------------------------------------------------
// Syntax tree produced by the first pass. Names are kept as tokens so that
// the linking pass can point diagnostics at them.

struct RawConstraint {
  CompareOp op = CompareOp::Eq;
  std::optional<Token> value;  // absent for `= _`
};

struct RawBoundaryRef {
  Token chronoid;
  Token coordinate;
};

struct RawSample {
  Token coordinate;
  Token target;
};

struct RawProperty {
  Token name;
  bool categorical = false;
  std::vector<Token> symbols;
  std::string support;  // isolated | non-isolated | global
  std::optional<Token> radius;
};

struct RawChronoid {
  Token name;
  Token left;
  Token right;
};

struct RawPresential {
  Token name;
  bool material = true;
  RawBoundaryRef at;
  std::vector<std::pair<Token, Token>> valuation;
};

struct RawTrajectory {
  Token property;
  std::vector<std::pair<Token, Token>> samples;
};

struct RawProcess {
  Token name;
  Token extent;
  std::vector<RawSample> boundaries;
  std::vector<RawTrajectory> trajectories;
};

struct RawContinuant {
  Token name;
  bool material = true;
  Token lifetime;
  std::vector<RawSample> exhibits;
};

struct RawFact {
  std::optional<Token> name;
  Token relator;
  std::vector<Token> args;
  std::optional<Token> value;
};

struct RawSituation {
  Token name;
  std::optional<RawBoundaryRef> at;
  std::optional<Token> during;
  std::optional<Token> founded_on;
  std::vector<Token> participants;
  std::vector<RawFact> facts;
};

struct RawPattern {
  Token relator;
  std::vector<Token> args;
  std::optional<RawConstraint> value;
};

struct RawPropRequirement {
  Token entity;
  Token property;
  RawConstraint constraint;
};

struct RawConcept {
  Token open;
  std::vector<RawPattern> facts;
  std::vector<RawPropRequirement> props;
};

struct RawFunction {
  Token name;
  std::vector<std::string> labels;
  std::optional<Token> kind;
  std::optional<Token> bearer;
  std::optional<RawConcept> req;
  std::optional<RawConcept> goal;
  std::vector<std::pair<Token, RawConstraint>> fitem;
};

struct RawPair {
  Token keyword;
  Token first;
  Token second;
};

struct RawModel {
  std::vector<RawProperty> properties;
  std::vector<RawChronoid> chronoids;
  std::vector<RawPresential> presentials;
  std::vector<RawProcess> processes;
  std::vector<RawContinuant> continuants;
  std::vector<RawSituation> situations;
  std::vector<RawFunction> functions;
  std::vector<RawPair> pairs;
};

struct SyntaxError {
  ParseDiagnostic diagnostic;
};

// ---------------------------------------------------------------------------
// First pass: statements.

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  RawModel parse_model() {
    RawModel raw;
    while (!at_end()) {
      std::size_t start = pos_;
      try {
        statement(raw);
      } catch (const SyntaxError& e) {
        diags_.push_back(e.diagnostic);
        recover(start);
      }
    }
    return raw;
  }

  Proposition parse_query() {
    Proposition phi;
    if (peek().is("fact")) {
      next();
      FactProp fp;
      fp.relator = ident("relator").text;
      for (auto& a : arg_list(true)) fp.args.push_back(a.text);
      phi.form = std::move(fp);
    } else if (peek().is("holds")) {
      next();
      HoldsProp hp;
      expect("(");
      hp.subject = ident("subject").text;
      expect(",");
      hp.property = ident("property").text;
      expect(",");
      auto c = constraint(true);
      hp.constraint.op = c.op;
      if (c.value) hp.constraint.value = literal_value(*c.value);
      expect(")");
      phi.form = std::move(hp);
    } else {
      fail(peek(), "expected 'fact' or 'holds'");
    }
    if (peek().is("at")) {
      next();
      phi.when = AtTime{rational(number("time coordinate"))};
    } else if (peek().is("during")) {
      next();
      auto open = expect("[");
      auto l = number("left bound");
      expect(",");
      auto r = number("right bound");
      expect("]");
      auto lv = rational(l), rv = rational(r);
      if (lv >= rv) {
        throw SyntaxError{{open.span, std::string(code::kBadRational),
                           "interval [" + lv.str() + "," + rv.str() + "] has no positive duration"}};
      }
      phi.when = During{make_chronoid(lv, rv, "query")};
    }
    if (peek().is(";")) next();
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "' after proposition");
    return phi;
  }

  bool at_end() const { return toks_[pos_].kind == TokenKind::End; }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (!at_end()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw SyntaxError{{at.span, std::string(code::kUnexpectedToken), message}};
  }

  Token expect(std::string_view punct) {
    if (!peek().is(punct)) {
      fail(peek(), "expected '" + std::string(punct) + "', found " + describe(peek()));
    }
    return next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of input";
    return "'" + t.text + "'";
  }

  Token ident(std::string_view what) {
    if (peek().kind != TokenKind::Ident) fail(peek(), "expected " + std::string(what));
    return next();
  }

  Token declared_name(std::string_view what) {
    auto t = ident(what);
    if (t.text == kWildcard) fail(t, "'_' cannot be declared");
    return t;
  }

  Token number(std::string_view what) {
    if (peek().kind != TokenKind::Number) fail(peek(), "expected " + std::string(what));
    return next();
  }

  Token value_token() {
    if (peek().kind != TokenKind::Ident && peek().kind != TokenKind::Number) {
      fail(peek(), "expected a value");
    }
    return next();
  }

  static TimeCoordinate rational(const Token& t) {
    try {
      return TimeCoordinate::parse(t.text);
    } catch (const Error& e) {
      throw SyntaxError{{t.span, std::string(code::kBadRational), e.what()}};
    }
  }

  static Value literal_value(const Token& t) {
    if (t.kind == TokenKind::Number) return rational(t).value();
    return Symbol{t.text};
  }

  // Skips to the end of the broken statement: a `;` or the `}` closing its
  // body, or the next statement keyword at top level.
  void recover(std::size_t start) {
    int depth = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      if (toks_[i].is("{")) ++depth;
      if (toks_[i].is("}")) --depth;
    }
    while (!at_end()) {
      if (depth <= 0 && pos_ > start && starts_statement(peek())) break;
      const Token& t = next();
      if (t.is("{")) {
        ++depth;
      } else if (t.is("}")) {
        if (--depth <= 0) break;
      } else if (t.is(";") && depth <= 0) {
        break;
      }
    }
    while (peek().is(";")) next();
  }

  static bool starts_statement(const Token& t) {
    static const std::set<std::string> words{
        "property", "chronoid", "presential", "immaterial", "process", "continuant",
        "situation", "function", "exe", "requirement-instance", "goal-instance"};
    return t.kind == TokenKind::Ident && words.count(t.text);
  }

  void end_statement() { expect(";"); }
  void optional_semicolon() {
    if (peek().is(";")) next();
  }

  void statement(RawModel& raw) {
    const Token& kw = peek();
    if (kw.kind != TokenKind::Ident) fail(kw, "expected a declaration, found " + describe(kw));
    bool material = true;
    if (kw.text == "immaterial") {
      next();
      material = false;
      if (!peek().is("presential") && !peek().is("continuant")) {
        fail(peek(), "'immaterial' applies to presentials and continuants");
      }
    }
    const std::string word = peek().text;
    if (word == "property") {
      raw.properties.push_back(property());
    } else if (word == "chronoid") {
      raw.chronoids.push_back(chronoid());
    } else if (word == "presential") {
      raw.presentials.push_back(presential(material));
    } else if (word == "process") {
      raw.processes.push_back(process());
    } else if (word == "continuant") {
      raw.continuants.push_back(continuant(material));
    } else if (word == "situation") {
      raw.situations.push_back(situation());
    } else if (word == "function") {
      raw.functions.push_back(function());
    } else if (word == "exe" || word == "requirement-instance" || word == "goal-instance") {
      RawPair p;
      p.keyword = next();
      p.first = ident("identifier");
      p.second = ident("identifier");
      end_statement();
      raw.pairs.push_back(std::move(p));
    } else if (word == "fact") {
      fail(peek(), "facts must be declared inside a situation");
    } else {
      fail(peek(), "unknown declaration '" + word + "'");
    }
  }

  RawProperty property() {
    next();
    RawProperty p;
    p.name = declared_name("property name");
    expect(":");
    auto domain = ident("'categorical' or 'numeric'");
    if (domain.text == "categorical") {
      p.categorical = true;
      expect("{");
      p.symbols.push_back(declared_name("symbol"));
      while (peek().is(",")) {
        next();
        p.symbols.push_back(declared_name("symbol"));
      }
      expect("}");
    } else if (domain.text != "numeric") {
      fail(domain, "expected 'categorical' or 'numeric'");
    }
    auto support = ident("'isolated', 'non-isolated' or 'global'");
    p.support = support.text;
    if (p.support == "non-isolated") {
      expect("(");
      p.radius = number("window radius");
      expect(")");
    } else if (p.support != "isolated" && p.support != "global") {
      fail(support, "expected 'isolated', 'non-isolated' or 'global'");
    }
    end_statement();
    return p;
  }

  RawChronoid chronoid() {
    next();
    RawChronoid c;
    c.name = declared_name("chronoid name");
    expect("=");
    expect("[");
    c.left = number("left bound");
    expect(",");
    c.right = number("right bound");
    expect("]");
    end_statement();
    return c;
  }

  RawBoundaryRef boundary_ref() {
    RawBoundaryRef b;
    b.chronoid = ident("chronoid name");
    expect("@");
    b.coordinate = number("time coordinate");
    return b;
  }

  RawPresential presential(bool material) {
    next();
    RawPresential p;
    p.material = material;
    p.name = declared_name("presential name");
    if (!peek().is("at")) fail(peek(), "expected 'at'");
    next();
    p.at = boundary_ref();
    if (peek().is("{")) {
      next();
      while (!peek().is("}")) {
        auto prop = ident("property name");
        expect("=");
        auto v = value_token();
        expect(";");
        p.valuation.emplace_back(std::move(prop), std::move(v));
      }
      next();
      optional_semicolon();
    } else {
      end_statement();
    }
    return p;
  }

  RawSample sample(std::string_view keyword) {
    if (!peek().is(keyword)) fail(peek(), "expected '" + std::string(keyword) + "'");
    next();
    RawSample s;
    s.coordinate = number("time coordinate");
    expect("->");
    s.target = ident("presential name");
    expect(";");
    return s;
  }

  RawProcess process() {
    next();
    RawProcess p;
    p.name = declared_name("process name");
    if (!peek().is("extent")) fail(peek(), "expected 'extent'");
    next();
    p.extent = ident("chronoid name");
    expect("{");
    while (!peek().is("}")) {
      if (peek().is("trajectory")) {
        next();
        RawTrajectory t;
        t.property = ident("property name");
        expect("{");
        while (!peek().is("}")) {
          auto at = number("time coordinate");
          expect(":");
          auto v = value_token();
          expect(";");
          t.samples.emplace_back(std::move(at), std::move(v));
        }
        next();
        p.trajectories.push_back(std::move(t));
      } else {
        p.boundaries.push_back(sample("boundary"));
      }
    }
    next();
    optional_semicolon();
    return p;
  }

  RawContinuant continuant(bool material) {
    next();
    RawContinuant c;
    c.material = material;
    c.name = declared_name("continuant name");
    if (!peek().is("lifetime")) fail(peek(), "expected 'lifetime'");
    next();
    c.lifetime = ident("chronoid name");
    expect("{");
    while (!peek().is("}")) c.exhibits.push_back(sample("exhibits"));
    next();
    optional_semicolon();
    return c;
  }

  std::vector<Token> arg_list(bool allow_wildcard) {
    std::vector<Token> args;
    expect("(");
    if (peek().is(")")) {
      next();
      return args;
    }
    do {
      if (!args.empty()) next();
      auto a = ident("argument");
      if (!allow_wildcard && a.text == kWildcard) fail(a, "wildcards are only allowed in patterns");
      args.push_back(std::move(a));
    } while (peek().is(","));
    expect(")");
    return args;
  }

  RawSituation situation() {
    next();
    RawSituation s;
    s.name = declared_name("situation name");
    if (peek().is("at")) {
      next();
      s.at = boundary_ref();
    } else if (peek().is("during")) {
      next();
      s.during = ident("chronoid name");
    } else {
      fail(peek(), "expected 'at' or 'during'");
    }
    if (peek().is("founded-on")) {
      next();
      s.founded_on = ident("process name");
    }
    if (!peek().is("{")) {
      end_statement();
      return s;
    }
    next();
    while (!peek().is("}")) {
      if (peek().is("participants")) {
        next();
        s.participants.push_back(ident("participant"));
        while (peek().is(",")) {
          next();
          s.participants.push_back(ident("participant"));
        }
        expect(";");
      } else if (peek().is("fact")) {
        next();
        RawFact f;
        if (peek(1).is(":")) {
          f.name = declared_name("fact name");
          next();
        }
        f.relator = ident("relator");
        f.args = arg_list(false);
        if (peek().is("=")) {
          next();
          f.value = value_token();
        }
        expect(";");
        s.facts.push_back(std::move(f));
      } else {
        fail(peek(), "expected 'participants' or 'fact'");
      }
    }
    next();
    optional_semicolon();
    return s;
  }

  RawConstraint constraint(bool op_optional) {
    RawConstraint c;
    static const std::map<std::string, CompareOp> ops{
        {"=", CompareOp::Eq}, {"!=", CompareOp::Ne}, {"<", CompareOp::Lt},
        {"<=", CompareOp::Le}, {">", CompareOp::Gt}, {">=", CompareOp::Ge}};
    if (peek().kind == TokenKind::Punct && ops.count(peek().text)) {
      c.op = ops.at(next().text);
    } else if (!op_optional) {
      fail(peek(), "expected a comparison operator");
    }
    if (peek().is(kWildcard)) {
      auto w = next();
      if (c.op != CompareOp::Eq) fail(w, "'_' can only be compared with '='");
      c.op = CompareOp::Defined;
      return c;
    }
    c.value = value_token();
    return c;
  }

  RawConcept concept_body() {
    RawConcept c;
    c.open = expect("{");
    while (!peek().is("}")) {
      if (peek().is("fact")) {
        next();
        RawPattern p;
        p.relator = ident("relator");
        p.args = arg_list(true);
        if (!peek().is(";")) p.value = constraint(false);
        expect(";");
        c.facts.push_back(std::move(p));
      } else if (peek().is("holds")) {
        next();
        RawPropRequirement r;
        r.entity = ident("entity");
        expect(".");
        r.property = ident("property name");
        r.constraint = constraint(false);
        expect(";");
        c.props.push_back(std::move(r));
      } else {
        fail(peek(), "expected 'fact' or 'holds'");
      }
    }
    auto close = next();
    if (c.facts.empty() && c.props.empty()) fail(close, "a concept needs at least one constraint");
    return c;
  }

  RawFunction function() {
    next();
    RawFunction f;
    f.name = declared_name("function name");
    expect("{");
    while (!peek().is("}")) {
      auto kw = ident("function clause");
      if (kw.text == "label") {
        if (peek().kind != TokenKind::String) fail(peek(), "expected a string label");
        f.labels.push_back(next().text);
        expect(";");
      } else if (kw.text == "kind") {
        f.kind = ident("function kind");
        expect(";");
      } else if (kw.text == "bearer") {
        f.bearer = ident("bearer");
        expect(";");
      } else if (kw.text == "requires") {
        f.req = concept_body();
      } else if (kw.text == "goal") {
        f.goal = concept_body();
      } else if (kw.text == "fitem") {
        expect("{");
        while (!peek().is("}")) {
          auto prop = ident("property name");
          auto c = constraint(false);
          expect(";");
          f.fitem.emplace_back(std::move(prop), std::move(c));
        }
        next();
      } else {
        fail(kw, "unknown function clause '" + kw.text + "'");
      }
    }
    auto close = next();
    if (!f.req) fail(close, "function " + f.name.text + " needs a 'requires' concept");
    if (!f.goal) fail(close, "function " + f.name.text + " needs a 'goal' concept");
    optional_semicolon();
    return f;
  }

  std::vector<Token> toks_;
  std::vector<ParseDiagnostic>& diags_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Second pass: declarations, then links.

enum class DeclKind { Property, Chronoid, Presential, Process, Continuant, Situation, Function, Fact };

std::string_view decl_name(DeclKind k) {
  switch (k) {
    case DeclKind::Property: return "property";
    case DeclKind::Chronoid: return "chronoid";
    case DeclKind::Presential: return "presential";
    case DeclKind::Process: return "process";
    case DeclKind::Continuant: return "continuant";
    case DeclKind::Situation: return "situation";
    case DeclKind::Function: return "function";
    case DeclKind::Fact: return "fact";
  }
  return "?";
}

class Linker {
 public:
  Linker(const RawModel& raw, std::vector<ParseDiagnostic>& diags) : raw_(raw), diags_(diags) {}

  Model run() {
    declare_all();
    for (const auto& c : raw_.chronoids) link(c);
    for (const auto& p : raw_.properties) link(p);
    for (const auto& p : raw_.presentials) link(p);
    for (const auto& p : raw_.processes) link(p);
    for (const auto& c : raw_.continuants) link(c);
    for (const auto& s : raw_.situations) link(s);
    for (const auto& f : raw_.functions) link(f);
    for (const auto& p : raw_.pairs) link(p);
    return std::move(m_);
  }

 private:
  void report(const Token& at, std::string_view code, std::string message) {
    diags_.push_back({at.span, std::string(code), std::move(message)});
  }

  void declare(const Token& name, DeclKind kind) {
    auto [it, fresh] = decls_.emplace(name.text, std::make_pair(kind, name));
    if (fresh) return;
    const auto& [prev_kind, prev_tok] = it->second;
    auto where = std::to_string(prev_tok.span.line) + ":" + std::to_string(prev_tok.span.column);
    if (prev_kind == kind) {
      report(name, code::kDuplicateId,
             std::string(decl_name(kind)) + " '" + name.text + "' is already declared at " + where);
    } else {
      report(name, code::kKindConflict,
             "'" + name.text + "' is declared as " + std::string(decl_name(kind)) +
                 " but already as " + std::string(decl_name(prev_kind)) + " at " + where);
    }
    clashed_.insert(name.text);
  }

  void declare_all() {
    for (const auto& p : raw_.properties) declare(p.name, DeclKind::Property);
    for (const auto& c : raw_.chronoids) declare(c.name, DeclKind::Chronoid);
    for (const auto& p : raw_.presentials) declare(p.name, DeclKind::Presential);
    for (const auto& p : raw_.processes) declare(p.name, DeclKind::Process);
    for (const auto& c : raw_.continuants) declare(c.name, DeclKind::Continuant);
    for (const auto& s : raw_.situations) {
      declare(s.name, DeclKind::Situation);
      for (const auto& f : s.facts) {
        if (f.name) declare(*f.name, DeclKind::Fact);
      }
    }
    for (const auto& f : raw_.functions) declare(f.name, DeclKind::Function);
  }

  /// Resolves a reference that must be of one of `kinds`.
  bool resolve(const Token& ref, std::initializer_list<DeclKind> kinds, std::string_view what) {
    auto it = decls_.find(ref.text);
    if (it == decls_.end()) {
      report(ref, code::kDanglingReference,
             std::string(what) + " '" + ref.text + "' is not declared");
      return false;
    }
    if (std::find(kinds.begin(), kinds.end(), it->second.first) == kinds.end()) {
      report(ref, code::kKindConflict,
             "'" + ref.text + "' is a " + std::string(decl_name(it->second.first)) + ", expected " +
                 std::string(what));
      return false;
    }
    return true;
  }

  bool resolve_entity(const Token& ref, std::string_view what) {
    return resolve(ref,
                   {DeclKind::Presential, DeclKind::Process, DeclKind::Continuant,
                    DeclKind::Situation, DeclKind::Fact},
                   what);
  }

  std::optional<TimeCoordinate> coordinate(const Token& t) {
    try {
      return TimeCoordinate::parse(t.text);
    } catch (const Error& e) {
      report(t, code::kBadRational, e.what());
      return std::nullopt;
    }
  }

  const Chronoid* chronoid(const Token& ref) {
    if (!resolve(ref, {DeclKind::Chronoid}, "chronoid")) return nullptr;
    auto it = m_.chronoids.find(ref.text);
    return it == m_.chronoids.end() ? nullptr : &it->second;
  }

  std::optional<TimeBoundary> boundary(const RawBoundaryRef& ref) {
    const auto* ch = chronoid(ref.chronoid);
    auto t = coordinate(ref.coordinate);
    if (ch == nullptr || !t) return std::nullopt;
    try {
      return inner_boundary(*ch, *t);
    } catch (const Error& e) {
      report(ref.coordinate, code::kBadRational, e.what());
      return std::nullopt;
    }
  }

  const PropertyDef* property(const Token& ref) {
    auto it = decls_.find(ref.text);
    if (it == decls_.end()) {
      report(ref, code::kUnknownId, "unknown property '" + ref.text + "'");
      return nullptr;
    }
    if (it->second.first != DeclKind::Property) {
      report(ref, code::kKindConflict, "'" + ref.text + "' is not a property");
      return nullptr;
    }
    auto p = m_.properties.find(ref.text);
    return p == m_.properties.end() ? nullptr : &p->second;
  }

  std::optional<Value> value(const PropertyDef& def, const Token& t) {
    if (def.is_numeric()) {
      if (t.kind != TokenKind::Number) {
        report(t, code::kKindConflict, def.name + " is numeric, got '" + t.text + "'");
        return std::nullopt;
      }
      auto r = coordinate(t);
      if (!r) return std::nullopt;
      return Value(r->value());
    }
    if (t.kind != TokenKind::Ident) {
      report(t, code::kKindConflict, def.name + " is categorical, got '" + t.text + "'");
      return std::nullopt;
    }
    if (!def.admits(Symbol{t.text})) {
      report(t, code::kUnknownId, "'" + t.text + "' is not a value of " + def.name);
      return std::nullopt;
    }
    return Value(Symbol{t.text});
  }

  std::optional<ValueConstraint> constraint(const PropertyDef* def, const RawConstraint& c) {
    ValueConstraint out{c.op, std::nullopt};
    if (!c.value) return out;
    if (def == nullptr) return std::nullopt;
    auto v = value(*def, *c.value);
    if (!v) return std::nullopt;
    bool ordered = c.op != CompareOp::Eq && c.op != CompareOp::Ne;
    if (ordered && !def->is_numeric()) {
      report(*c.value, code::kKindConflict, "ordering comparison on categorical " + def->name);
      return std::nullopt;
    }
    out.value = std::move(*v);
    return out;
  }

  bool owned(const Token& name) const { return !clashed_.count(name.text); }

  void link(const RawChronoid& c) {
    auto l = coordinate(c.left);
    auto r = coordinate(c.right);
    if (!l || !r) return;
    try {
      m_.chronoids.emplace(c.name.text, make_chronoid(*l, *r, c.name.text));
    } catch (const Error& e) {
      report(c.left, code::kBadRational, e.what());
    }
  }

  void link(const RawProperty& p) {
    PropertyDef def;
    def.name = p.name.text;
    if (p.categorical) {
      CategoricalDomain dom;
      for (const auto& s : p.symbols) {
        if (!dom.symbols.insert(s.text).second) {
          report(s, code::kDuplicateId, "symbol '" + s.text + "' repeated");
        }
      }
      def.domain = std::move(dom);
    } else {
      def.domain = NumericDomain{};
    }
    if (p.support == "isolated") {
      def.support = IsolatedSupport{};
    } else if (p.support == "global") {
      def.support = GlobalSupport{};
    } else {
      auto r = coordinate(*p.radius);
      if (!r) return;
      if (r->value() <= 0) {
        report(*p.radius, code::kBadRational, "window radius must be positive");
        return;
      }
      def.support = NonIsolatedSupport{r->value()};
    }
    if (owned(p.name)) m_.properties.emplace(def.name, std::move(def));
  }

  void link(const RawPresential& raw) {
    Presential p;
    p.id = raw.name.text;
    p.material = raw.material;
    auto at = boundary(raw.at);
    if (!at) return;
    p.at = std::move(*at);
    for (const auto& [prop_tok, value_tok] : raw.valuation) {
      const auto* def = property(prop_tok);
      if (def == nullptr) continue;
      if (!def->is_isolated()) {
        report(prop_tok, code::kKindConflict,
               def->name + " is not isolated and cannot be valued at a presential");
        continue;
      }
      auto v = value(*def, value_tok);
      if (!v) continue;
      if (!p.valuation.emplace(def->name, std::move(*v)).second) {
        report(prop_tok, code::kDuplicateId, def->name + " valued twice");
      }
    }
    if (owned(raw.name)) m_.presentials.emplace(p.id, std::move(p));
  }

  SampleMap samples(const std::vector<RawSample>& raw, const Chronoid& span,
                    const Token& owner, std::string_view relation) {
    SampleMap out;
    std::set<TimeCoordinate> claimed;
    for (const auto& s : raw) {
      auto t = coordinate(s.coordinate);
      bool target_ok = resolve(s.target, {DeclKind::Presential}, "presential");
      if (!t) continue;
      claimed.insert(*t);
      if (!span.contains(*t)) {
        report(s.coordinate, code::kBadRational,
               t->str() + " is outside " + span.id + " [" + span.left.str() + "," +
                   span.right.str() + "]");
        continue;
      }
      if (!target_ok) continue;
      if (auto p = presential_coordinate(s.target.text); p && *p != *t) {
        report(s.target, code::kBadRational,
               "presential '" + s.target.text + "' is at " + p->str() + ", not " + t->str());
        continue;
      }
      if (!out.emplace(*t, s.target.text).second) {
        report(s.coordinate, code::kDuplicateId,
               std::string(relation) + " at " + t->str() + " given twice");
      }
    }
    for (const auto* end : {&span.left, &span.right}) {
      if (!claimed.count(*end)) {
        report(owner, code::kBadRational,
               owner.text + " has no " + std::string(relation) + " at endpoint " + end->str() +
                   " of " + span.id);
      }
    }
    return out;
  }

  std::optional<TimeCoordinate> presential_coordinate(const std::string& id) const {
    for (const auto& p : raw_.presentials) {
      if (p.name.text != id) continue;
      try {
        return TimeCoordinate::parse(p.at.coordinate.text);
      } catch (const Error&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  void link(const RawProcess& raw) {
    const auto* extent = chronoid(raw.extent);
    if (extent == nullptr) return;
    Process p;
    p.id = raw.name.text;
    p.extent = *extent;
    p.boundaries = samples(raw.boundaries, *extent, raw.name, "boundary");
    for (const auto& t : raw.trajectories) {
      const auto* def = property(t.property);
      if (def == nullptr) continue;
      if (def->is_isolated()) {
        report(t.property, code::kKindConflict,
               def->name + " is isolated; its values belong to presentials");
        continue;
      }
      Trajectory traj;
      for (const auto& [at_tok, v_tok] : t.samples) {
        auto at = coordinate(at_tok);
        auto v = value(*def, v_tok);
        if (!at || !v) continue;
        if (!extent->contains(*at)) {
          report(at_tok, code::kBadRational, at->str() + " is outside " + extent->id);
          continue;
        }
        if (!traj.empty() && !(traj.back().first < *at)) {
          report(at_tok, code::kBadRational, "trajectory samples must be strictly increasing");
          continue;
        }
        traj.emplace_back(*at, std::move(*v));
      }
      if (!p.trajectories.emplace(def->name, std::move(traj)).second) {
        report(t.property, code::kDuplicateId, "trajectory of " + def->name + " given twice");
      }
    }
    if (owned(raw.name)) m_.processes.emplace(p.id, std::move(p));
  }

  void link(const RawContinuant& raw) {
    const auto* lifetime = chronoid(raw.lifetime);
    if (lifetime == nullptr) return;
    Continuant c;
    c.id = raw.name.text;
    c.material = raw.material;
    c.lifetime = *lifetime;
    c.exhibits = samples(raw.exhibits, *lifetime, raw.name, "exhibits");
    if (owned(raw.name)) m_.continuants.emplace(c.id, std::move(c));
  }

  void link(const RawSituation& raw) {
    Situation s;
    s.id = raw.name.text;
    if (raw.at) {
      auto b = boundary(*raw.at);
      if (!b) return;
      s.extent = std::move(*b);
    } else {
      const auto* ch = chronoid(*raw.during);
      if (ch == nullptr) return;
      s.extent = *ch;
    }
    if (raw.founded_on && resolve(*raw.founded_on, {DeclKind::Process}, "process")) {
      s.founded_on = raw.founded_on->text;
    }
    for (const auto& who : raw.participants) {
      if (resolve_entity(who, "participant")) s.participants.insert(who.text);
    }
    for (const auto& rf : raw.facts) {
      Fact f;
      f.relator = rf.relator.text;
      if (rf.name) f.name = rf.name->text;
      bool ok = true;
      for (const auto& a : rf.args) {
        ok = resolve_entity(a, "fact argument") && ok;
        f.args.push_back(a.text);
      }
      if (rf.value) {
        const auto* def = property(rf.relator);
        if (def == nullptr) continue;
        if (rf.args.size() != 1) {
          report(rf.relator, code::kUnexpectedToken,
                 "a property fact takes exactly one argument, its bearer");
          continue;
        }
        auto v = value(*def, *rf.value);
        if (!v) continue;
        f.value = std::move(*v);
      }
      if (ok) s.constituents.push_back(std::move(f));
    }
    std::sort(s.constituents.begin(), s.constituents.end());
    s.constituents.erase(std::unique(s.constituents.begin(), s.constituents.end()),
                         s.constituents.end());
    if (owned(raw.name)) m_.situations.emplace(s.id, std::move(s));
  }

  SituationConcept concept_of(const RawConcept& raw, std::string name) {
    SituationConcept c;
    c.name = std::move(name);
    for (const auto& rp : raw.facts) {
      FactPattern p;
      p.relator = rp.relator.text;
      for (const auto& a : rp.args) {
        if (a.text != kWildcard) resolve_entity(a, "pattern argument");
        p.args.push_back(a.text);
      }
      if (rp.value) {
        const auto* def = property(rp.relator);
        auto vc = constraint(def, *rp.value);
        if (!vc) continue;
        p.value = std::move(*vc);
      }
      c.required_facts.push_back(std::move(p));
    }
    for (const auto& rr : raw.props) {
      resolve_entity(rr.entity, "entity");
      const auto* def = property(rr.property);
      if (def == nullptr) continue;
      auto vc = constraint(def, rr.constraint);
      if (!vc) continue;
      c.required_props.push_back({rr.entity.text, def->name, std::move(*vc)});
    }
    return c;
  }

  void link(const RawFunction& raw) {
    FunctionSpec f;
    f.id = raw.name.text;
    f.labels.insert(raw.labels.begin(), raw.labels.end());
    if (raw.kind) {
      static const std::map<std::string, FunctionKind> kinds{
          {"conceptual", FunctionKind::Conceptual},
          {"universal", FunctionKind::Universal},
          {"individual", FunctionKind::Individual}};
      auto it = kinds.find(raw.kind->text);
      if (it == kinds.end()) {
        report(*raw.kind, code::kUnknownId, "unknown function kind '" + raw.kind->text + "'");
      } else {
        f.kind = it->second;
      }
    }
    if (raw.bearer) {
      if (resolve_entity(*raw.bearer, "bearer")) f.bearer = raw.bearer->text;
    } else if (f.kind == FunctionKind::Individual) {
      report(raw.name, code::kDanglingReference, "individual function " + f.id + " needs a bearer");
    }
    f.req = concept_of(*raw.req, f.id + "-req");
    f.goal = concept_of(*raw.goal, f.id + "-goal");
    for (const auto& [prop, rc] : raw.fitem) {
      const auto* def = property(prop);
      if (def == nullptr) continue;
      auto vc = constraint(def, rc);
      if (!vc) continue;
      f.fitem.push_back({def->name, std::move(*vc)});
    }
    if (owned(raw.name)) m_.functions.emplace(f.id, std::move(f));
  }

  void link(const RawPair& raw) {
    if (raw.keyword.text == "exe") {
      bool ok = resolve_entity(raw.first, "executor");
      ok = resolve(raw.second, {DeclKind::Process}, "process") && ok;
      if (ok && !m_.exe.emplace(raw.first.text, raw.second.text).second) {
        report(raw.keyword, code::kDuplicateId, "exe assertion repeated");
      }
      return;
    }
    bool ok = resolve(raw.first, {DeclKind::Function}, "function");
    ok = resolve(raw.second, {DeclKind::Situation}, "situation") && ok;
    if (!ok) return;
    auto& registry =
        raw.keyword.text == "requirement-instance" ? m_.requirement_instances : m_.goal_instances;
    if (!registry[raw.first.text].insert(raw.second.text).second) {
      report(raw.keyword, code::kDuplicateId, raw.keyword.text + " repeated");
    }
  }

  const RawModel& raw_;
  std::vector<ParseDiagnostic>& diags_;
  std::map<std::string, std::pair<DeclKind, Token>> decls_;
  std::set<std::string> clashed_;
  Model m_;
};

bool diag_less(const ParseDiagnostic& a, const ParseDiagnostic& b) {
  return std::tie(a.span.line, a.span.column, a.code, a.message) <
         std::tie(b.span.line, b.span.column, b.code, b.message);
}

}  // namespace

ParseResult parse(std::string_view source, std::string file) {
  ParseResult result;
  auto tokens = detail::lex(source, file, result.diagnostics);
  Parser parser(std::move(tokens), result.diagnostics);
  auto raw = parser.parse_model();
  Linker linker(raw, result.diagnostics);
  auto model = linker.run();
  if (result.diagnostics.empty()) {
    canonicalize(model);
    result.model = std::move(model);
  } else {
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), diag_less);
  }
  return result;
}

PropositionResult parse_proposition(std::string_view text) {
  PropositionResult result;
  auto tokens = detail::lex(text, "<query>", result.diagnostics);
  if (!result.diagnostics.empty()) return result;
  Parser parser(std::move(tokens), result.diagnostics);
  try {
    result.proposition = parser.parse_query();
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  return result;
}

}  // namespace gfo::dsl

#include "lexer.hpp"

#include <cctype>

namespace gfo::dsl::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file, std::vector<ParseDiagnostic>& diags)
      : src_(src), file_(file), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) break;
      auto start = mark();
      char c = src_[pos_];
      if (ident_start(c)) {
        while (pos_ < src_.size() && ident_char(src_[pos_])) {
          if (src_[pos_] == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') break;
          advance();
        }
        out.push_back(make(TokenKind::Ident, start));
      } else if (digit(c) || (c == '-' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
        advance();
        while (pos_ < src_.size() && digit(src_[pos_])) advance();
        if (pos_ + 1 < src_.size() && (src_[pos_] == '/' || src_[pos_] == '.') &&
            digit(src_[pos_ + 1])) {
          advance();
          while (pos_ < src_.size() && digit(src_[pos_])) advance();
        }
        out.push_back(make(TokenKind::Number, start));
      } else if (c == '"') {
        out.push_back(string_literal(start));
      } else if (auto len = punct_length(); len > 0) {
        for (std::size_t i = 0; i < len; ++i) advance();
        out.push_back(make(TokenKind::Punct, start));
      } else {
        advance();
        diags_.push_back({span_from(start), std::string(code::kUnexpectedToken),
                          "unexpected character '" + std::string(1, c) + "'"});
      }
    }
    Token end;
    end.kind = TokenKind::End;
    end.span = end_span();
    out.push_back(std::move(end));
    return out;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int col;
  };

  Mark mark() const { return {pos_, line_, col_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan span_from(const Mark& m) const {
    // Tokens never span lines except strings; clamp to the first line.
    int length = static_cast<int>(pos_ - m.pos);
    if (line_ != m.line) {
      auto eol = src_.find('\n', m.pos);
      length = static_cast<int>(eol - m.pos);
    }
    return {file_, m.line, m.col, std::max(length, 1)};
  }

  SourceSpan end_span() const {
    if (src_.empty()) return {file_, 1, 1, 1};
    // Point at the last character of the source.
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {file_, line, col, 1};
  }

  Token make(TokenKind kind, const Mark& m) const {
    return {kind, std::string(src_.substr(m.pos, pos_ - m.pos)), span_from(m)};
  }

  Token string_literal(const Mark& m) {
    advance();  // opening quote
    std::string text;
    bool closed = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '"') {
        advance();
        closed = true;
        break;
      }
      if (c == '\n') break;
      if (c == '\\' && pos_ + 1 < src_.size()) {
        advance();
        char e = src_[pos_];
        text += e == 'n' ? '\n' : e;
        advance();
        continue;
      }
      text += c;
      advance();
    }
    if (!closed) {
      diags_.push_back({span_from(m), std::string(code::kUnexpectedToken),
                        "unterminated string literal"});
    }
    return {TokenKind::String, std::move(text), span_from(m)};
  }

  std::size_t punct_length() const {
    static constexpr std::string_view two[] = {"->", "<=", ">=", "!="};
    for (auto p : two) {
      if (src_.substr(pos_, 2) == p) return 2;
    }
    static constexpr std::string_view one = ";,(){}[]@:=<>.";
    return one.find(src_[pos_]) != std::string_view::npos ? 1 : 0;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  const std::string& file_;
  std::vector<ParseDiagnostic>& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> lex(std::string_view source, const std::string& file,
                       std::vector<ParseDiagnostic>& diagnostics) {
  return Lexer(source, file, diagnostics).run();
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  for (char c : text) {
    if (!ident_char(c)) return false;
  }
  return true;
}

}  // namespace gfo::dsl::detail

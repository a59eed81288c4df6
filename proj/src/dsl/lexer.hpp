#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfo/dsl.hpp"

namespace gfo::dsl::detail {

enum class TokenKind { Ident, Number, String, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // string literals are unescaped
  SourceSpan span;

  bool is(std::string_view punct_or_word) const {
    return (kind == TokenKind::Punct || kind == TokenKind::Ident) && text == punct_or_word;
  }
};

/// Tokenizes `source`. Lexical errors are appended to `diagnostics` and the
/// offending characters skipped. The result always ends with an End token
/// whose span stays inside the source (or is 1:1 for empty input).
std::vector<Token> lex(std::string_view source, const std::string& file,
                       std::vector<ParseDiagnostic>& diagnostics);

bool is_identifier(std::string_view text);

}  // namespace gfo::dsl::detail

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gfo/dsl.hpp"

namespace gfo::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(GFO_CORPUS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Model parse_ok(std::string_view source) {
  auto r = dsl::parse(source);
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += d.str() + "\n";
    throw std::runtime_error(msg);
  }
  return std::move(*r.model);
}

inline Model load_corpus(const std::string& name) { return parse_ok(read_file(corpus_path(name))); }

inline Proposition proposition(std::string_view text) {
  auto r = dsl::parse_proposition(text);
  if (!r.proposition) throw std::runtime_error("bad proposition: " + std::string(text));
  return *r.proposition;
}

}  // namespace gfo::testing

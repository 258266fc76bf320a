//
// Copyright 2026 The geopriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "geopriv/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace geopriv::toml {

std::int64_t Value::as_int(std::string_view where) const {
  if (const auto* i = std::get_if<std::int64_t>(&v_)) return *i;
  throw ConfigError("'" + std::string(where) + "' must be an integer");
}

double Value::as_double(std::string_view where) const {
  if (const auto* d = std::get_if<double>(&v_)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&v_)) {
    return static_cast<double>(*i);
  }
  throw ConfigError("'" + std::string(where) + "' must be a number");
}

bool Value::as_bool(std::string_view where) const {
  if (const auto* b = std::get_if<bool>(&v_)) return *b;
  throw ConfigError("'" + std::string(where) + "' must be a boolean");
}

const std::string& Value::as_string(std::string_view where) const {
  if (const auto* s = std::get_if<std::string>(&v_)) return *s;
  throw ConfigError("'" + std::string(where) + "' must be a string");
}

const Array& Value::as_array(std::string_view where) const {
  if (const auto* a = std::get_if<Array>(&v_)) return *a;
  throw ConfigError("'" + std::string(where) + "' must be an array");
}

const Table& Value::as_table(std::string_view where) const {
  if (const auto* t = std::get_if<Table>(&v_)) return *t;
  throw ConfigError("'" + std::string(where) + "' must be a table");
}

Table& Value::table() { return std::get<Table>(v_); }

Array& Value::array() { return std::get<Array>(v_); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string source)
      : text_(text), source_(std::move(source)) {}

  Value run() {
    Value root;
    current_ = &root.table();
    root_ = &root.table();
    while (!at_end()) {
      skip_blank();
      if (at_end()) break;
      if (peek() == '[') {
        parse_header();
      } else {
        parse_key_value();
      }
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError(source_ + ":" + std::to_string(line_) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  // Whitespace, newlines, and comments between top-level constructs.
  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t') {
        ++pos_;
      } else if (c == '\n' || c == '\r') {
        advance_newline();
      } else if (c == '#') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  void advance_newline() {
    if (peek() == '\r') {
      ++pos_;
      if (!at_end() && peek() == '\n') advance();
      else ++line_;
    } else {
      advance();
    }
  }

  void skip_comment() {
    while (!at_end() && peek() != '\n') ++pos_;
  }

  void expect_line_end() {
    skip_spaces();
    if (at_end()) return;
    if (peek() == '#') {
      skip_comment();
      return;
    }
    if (peek() == '\n' || peek() == '\r') return;
    fail(std::string("unexpected character '") + peek() + "' after value");
  }

  static bool is_bare_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  std::string parse_bare_key() {
    std::size_t start = pos_;
    while (!at_end() && is_bare_key_char(peek())) ++pos_;
    if (pos_ == start) fail("expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<std::string> parse_dotted_key() {
    std::vector<std::string> parts;
    while (true) {
      skip_spaces();
      parts.push_back(parse_bare_key());
      skip_spaces();
      if (!at_end() && peek() == '.') {
        ++pos_;
        continue;
      }
      return parts;
    }
  }

  void parse_header() {
    ++pos_;  // consume '['
    const bool array_of_tables = !at_end() && peek() == '[';
    if (array_of_tables) ++pos_;
    const std::vector<std::string> path = parse_dotted_key();
    if (at_end() || peek() != ']') fail("expected ']' in table header");
    ++pos_;
    if (array_of_tables) {
      if (at_end() || peek() != ']') fail("expected ']]' in table header");
      ++pos_;
    }
    expect_line_end();

    Table* t = root_;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool last = i + 1 == path.size();
      auto it = t->find(path[i]);
      if (last && array_of_tables) {
        if (it == t->end()) {
          it = t->emplace(path[i], Value(Array{})).first;
        }
        auto& slot = it->second;
        if (!slot.is_array()) fail("'" + path[i] + "' is not an array of tables");
        slot.array().emplace_back(Table{});
        current_ = &slot.array().back().table();
        return;
      }
      if (it == t->end()) {
        it = t->emplace(path[i], Value(Table{})).first;
      } else if (last) {
        fail("table '" + path[i] + "' defined twice");
      }
      if (it->second.is_array()) {
        auto& arr = it->second.array();
        if (arr.empty() || !arr.back().is_table()) {
          fail("'" + path[i] + "' is not a table");
        }
        t = &arr.back().table();
      } else if (it->second.is_table()) {
        t = &it->second.table();
      } else {
        fail("'" + path[i] + "' is not a table");
      }
    }
    current_ = t;
  }

  void parse_key_value() {
    const std::string key = parse_bare_key();
    skip_spaces();
    if (at_end() || peek() != '=') fail("expected '=' after key '" + key + "'");
    ++pos_;
    skip_spaces();
    Value v = parse_value();
    expect_line_end();
    if (!current_->emplace(key, std::move(v)).second) {
      fail("key '" + key + "' defined twice");
    }
  }

  Value parse_value() {
    if (at_end()) fail("expected a value");
    const char c = peek();
    if (c == '"') return parse_string();
    if (c == '\'') fail("literal strings are not supported; use \"...\"");
    if (c == '[') return parse_array();
    if (c == '{') fail("inline tables are not supported");
    if (c == 't' || c == 'f') return parse_bool();
    return parse_number();
  }

  Value parse_string() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated escape");
        const char e = advance();
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case 'r': out.push_back('\r'); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        out.push_back(c);
      }
    }
    return Value(std::move(out));
  }

  Value parse_array() {
    ++pos_;  // '['
    Array arr;
    while (true) {
      skip_blank();
      if (at_end()) fail("unterminated array");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      arr.push_back(parse_value());
      skip_blank();
      if (at_end()) fail("unterminated array");
      if (peek() == ',') {
        ++pos_;
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
    return Value(std::move(arr));
  }

  Value parse_bool() {
    if (text_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return Value(true);
    }
    if (text_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return Value(false);
    }
    fail("expected a value");
  }

  Value parse_number() {
    std::size_t start = pos_;
    bool is_float = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
          c == '_') {
        ++pos_;
      } else if (c == '.' || c == 'e' || c == 'E') {
        is_float = true;
        ++pos_;
      } else {
        break;
      }
    }
    std::string tok(text_.substr(start, pos_ - start));
    if (tok.empty()) fail("expected a value");
    // Underscore separators must sit between digits.
    std::string clean;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (tok[i] == '_') {
        const bool ok = i > 0 && i + 1 < tok.size() &&
                        std::isdigit(static_cast<unsigned char>(tok[i - 1])) &&
                        std::isdigit(static_cast<unsigned char>(tok[i + 1]));
        if (!ok) fail("misplaced '_' in number '" + tok + "'");
      } else {
        clean.push_back(tok[i]);
      }
    }
    if (is_float) {
      double d = 0.0;
      const auto res = std::from_chars(clean.data(), clean.data() + clean.size(), d);
      if (res.ec != std::errc{} || res.ptr != clean.data() + clean.size()) {
        fail("bad float '" + tok + "'");
      }
      return Value(d);
    }
    std::int64_t i = 0;
    const auto res = std::from_chars(clean.data(), clean.data() + clean.size(), i);
    if (res.ec != std::errc{} || res.ptr != clean.data() + clean.size()) {
      fail("bad integer '" + tok + "'");
    }
    return Value(i);
  }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  Table* current_ = nullptr;
  Table* root_ = nullptr;
};

}  // namespace

Value parse(std::string_view text, const std::string& source_name) {
  return Parser(text, source_name).run();
}

Value parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

}  // namespace geopriv::toml

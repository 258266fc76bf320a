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

#ifndef GEOPRIV_TOML_LITE_HPP_
#define GEOPRIV_TOML_LITE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geopriv/errors.hpp"

// Reader for the TOML subset used by experiment configs: comments, [table]
// and [[array-of-table]] headers with dotted names, bare keys, basic
// strings, integers, floats, booleans, and (possibly multiline) arrays.
// Inline tables, dates, and multiline strings are rejected with an error.
namespace geopriv::toml {

class Value;

using Array = std::vector<Value>;
using Table = std::map<std::string, Value, std::less<>>;

class Value {
 public:
  Value() : v_(Table{}) {}
  explicit Value(std::int64_t i) : v_(i) {}
  explicit Value(double d) : v_(d) {}
  explicit Value(bool b) : v_(b) {}
  explicit Value(std::string s) : v_(std::move(s)) {}
  explicit Value(Array a) : v_(std::move(a)) {}
  explicit Value(Table t) : v_(std::move(t)) {}

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_table() const { return std::holds_alternative<Table>(v_); }

  // Checked accessors; `where` names the offending key in error messages.
  std::int64_t as_int(std::string_view where) const;
  double as_double(std::string_view where) const;  // accepts ints
  bool as_bool(std::string_view where) const;
  const std::string& as_string(std::string_view where) const;
  const Array& as_array(std::string_view where) const;
  const Table& as_table(std::string_view where) const;

  Table& table();
  Array& array();

 private:
  std::variant<std::int64_t, double, bool, std::string, Array, Table> v_;
};

Value parse(std::string_view text, const std::string& source_name = "<string>");
Value parse_file(const std::filesystem::path& path);

}  // namespace geopriv::toml

#endif  // GEOPRIV_TOML_LITE_HPP_

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

#ifndef GEOPRIV_ERRORS_HPP_
#define GEOPRIV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace geopriv {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A numeric argument lies outside the function's domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Point is too far from the projection reference (or projected offset too
// large) for the tangent-plane approximation to hold.
class OutOfProjectionRange : public Error {
 public:
  explicit OutOfProjectionRange(const std::string& what) : Error(what) {}
};

// Malformed input file. Carries file path and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class MissingDirectory : public Error {
 public:
  explicit MissingDirectory(const std::string& path)
      : Error("missing directory: " + path) {}
};

// Preprocessing rule references a field the dataset does not carry.
class RuleMismatch : public Error {
 public:
  explicit RuleMismatch(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
 public:
  explicit LengthMismatch(const std::string& what) : Error(what) {}
};

class TimestampMismatch : public Error {
 public:
  explicit TimestampMismatch(const std::string& what) : Error(what) {}
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("road graph has no nodes") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace geopriv

#endif  // GEOPRIV_ERRORS_HPP_

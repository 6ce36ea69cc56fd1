// Copyright 2026 The QDT Engine Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdt {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: out-of-range indices, zero vectors, unknown names,
/// wrong lengths. `path()` locates the offending field when the input
/// came from a problem document (JSON pointer syntax), and is empty
/// otherwise.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string path = {})
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Objects that belong to different rings or spaces were combined.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// The strategic state is orthogonal to every prospect in the lattice, so
/// no probability normalization exists.
class DegenerateLatticeError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem text (not a semantic problem).
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error("syntax error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qdt

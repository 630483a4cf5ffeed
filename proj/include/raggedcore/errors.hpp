// Copyright 2026 The raggedcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace raggedcore {

/// Base of every exception thrown by raggedcore.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index or entry outside the valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Structure or dtype does not conform to what an operation requires.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// Operation called in a state that forbids it (e.g. end_list without begin_list).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Argument values inconsistent with each other (e.g. counts vs content length).
class ValueError : public Error {
 public:
  using Error::Error;
};

/// On-disk or in-memory package that cannot be decoded.
class FormatError : public Error {
 public:
  using Error::Error;
};

class MissingBufferError : public FormatError {
 public:
  explicit MissingBufferError(std::string key)
      : FormatError("missing buffer '" + key + "'"), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Malformed JSON. position is the byte offset reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Form node class outside {NumpyArray, ListOffsetArray, RecordArray}.
class UnsupportedClassError : public Error {
 public:
  explicit UnsupportedClassError(std::string cls)
      : Error("unsupported form class '" + cls + "'"), cls_(std::move(cls)) {}

  const std::string& class_name() const noexcept { return cls_; }

 private:
  std::string cls_;
};

/// Lookup of a field or column name that does not exist. available() lists
/// the names that do.
class UnknownFieldError : public Error {
 public:
  UnknownFieldError(const std::string& what, std::string name,
                    std::vector<std::string> available)
      : Error(what), name_(std::move(name)), available_(std::move(available)) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& available() const noexcept { return available_; }

 private:
  std::string name_;
  std::vector<std::string> available_;
};

/// Layout failed structural validation. The message lists every violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A user callable failed while a kernel processed row `row()`.
class RowError : public Error {
 public:
  RowError(std::int64_t row, const std::string& cause)
      : Error("row " + std::to_string(row) + ": " + cause), row_(row) {}

  std::int64_t row() const noexcept { return row_; }

 private:
  std::int64_t row_;
};

}  // namespace raggedcore

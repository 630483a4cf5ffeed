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

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "raggedcore/dtype.hpp"

namespace raggedcore {

/// A fully materialized element: scalar, list of values, or record of named
/// values in field order. Used for inspection and tests; the engine itself
/// works on buffers and views.
class Value {
 public:
  using List = std::vector<Value>;
  using Record = std::vector<std::pair<std::string, Value>>;

  Value() : data_(Scalar{false}) {}
  Value(Scalar s) : data_(s) {}  // NOLINT(google-explicit-constructor)
  Value(List l) : data_(std::move(l)) {}  // NOLINT
  Value(Record r) : data_(std::move(r)) {}  // NOLINT

  bool is_scalar() const noexcept { return std::holds_alternative<Scalar>(data_); }
  bool is_list() const noexcept { return std::holds_alternative<List>(data_); }
  bool is_record() const noexcept { return std::holds_alternative<Record>(data_); }

  const Scalar& scalar() const { return std::get<Scalar>(data_); }
  const List& list() const { return std::get<List>(data_); }
  const Record& record() const { return std::get<Record>(data_); }

  /// Record field by name; throws UnknownFieldError.
  const Value& field(const std::string& name) const;

  /// Compact JSON: records as objects, lists as arrays, numbers in shortest
  /// round-trip form for their width (floats always carry a '.' or exponent).
  std::string to_json() const;
  void append_json(std::string& out) const;

  friend bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

 private:
  std::variant<Scalar, List, Record> data_;
};

/// Appends the JSON text of one scalar.
void append_scalar_json(std::string& out, const Scalar& s);

}  // namespace raggedcore

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
#include <string>
#include <string_view>
#include <vector>

#include "raggedcore/dtype.hpp"
#include "raggedcore/layout.hpp"

namespace raggedcore {

/// JSON-serializable structure of a layout tree: node classes, dtypes, field
/// names and form keys, without data.
///
/// Wire classes: NumpyArray {"primitive"}, ListOffsetArray {"offsets": "i64",
/// "content"}, RecordArray {"fields", "contents"}; every node has "form_key".
/// Buffers are named "<form_key>-data" and "<form_key>-offsets".
class Form {
 public:
  static Form numpy(PrimitiveType dtype, std::string form_key = {});
  static Form list_offset(Form content, std::string form_key = {});
  static Form record(std::vector<std::string> fields, std::vector<Form> contents,
                     std::string form_key = {});

  /// Parses form JSON (any key order). Throws ParseError on malformed JSON,
  /// UnsupportedClassError on unknown classes, FormatError on missing or
  /// invalid members (unknown dtype, non-"i64" offsets, duplicate form_key).
  static Form parse(std::string_view text);

  NodeKind kind() const noexcept { return kind_; }
  PrimitiveType dtype() const noexcept { return dtype_; }
  const std::string& form_key() const noexcept { return form_key_; }
  const Form& content() const { return contents_.at(0); }
  const std::vector<std::string>& fields() const noexcept { return fields_; }
  const std::vector<Form>& contents() const noexcept { return contents_; }

  /// Canonical text: two-space indent; class, per-class members, form_key.
  std::string to_json() const;

  std::string type_string() const;
  std::size_t node_count() const noexcept;

  /// Copy with form keys "node0", "node1", ... in depth-first pre-order.
  Form with_preorder_keys() const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  NodeKind kind_ = NodeKind::primitive;
  PrimitiveType dtype_ = PrimitiveType::float64;
  std::vector<std::string> fields_;
  std::vector<Form> contents_;
  std::string form_key_;
};

/// Structure of `layout` with pre-order keys.
Form form_of(const Layout& layout);

std::string data_buffer_name(const std::string& form_key);
std::string offsets_buffer_name(const std::string& form_key);

}  // namespace raggedcore

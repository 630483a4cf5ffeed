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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raggedcore/buffer.hpp"
#include "raggedcore/dtype.hpp"

namespace raggedcore {

enum class NodeKind : std::uint8_t { primitive, list_offset, record };

/// One immutable node of a layout tree: a primitive leaf over a data buffer,
/// a list over int64 offsets and a content layout, or a record of named
/// equal-length contents. Layouts are cheap shared handles.
///
/// Construction does not validate; see validate().
class Layout {
 public:
  static Layout primitive(PrimitiveType dtype, Buffer data, std::string form_key = {});
  static Layout list_offset(Buffer offsets, Layout content, std::string form_key = {});
  /// Record whose length is taken from its first content (0 when there are none).
  static Layout record(std::vector<std::string> fields, std::vector<Layout> contents,
                       std::string form_key = {});
  static Layout record(std::vector<std::string> fields, std::vector<Layout> contents,
                       std::int64_t length, std::string form_key = {});

  NodeKind kind() const noexcept;
  const std::string& form_key() const noexcept;

  /// primitive: bytes / width; list: offsets count - 1; record: its length.
  std::int64_t length() const noexcept;

  // primitive
  PrimitiveType dtype() const;
  const Buffer& data() const;

  // list_offset
  const Buffer& offsets() const;
  std::int64_t offset(std::int64_t i) const noexcept;
  std::int64_t offset_count() const noexcept;
  const Layout& content() const;

  // record
  const std::vector<std::string>& fields() const;
  const std::vector<Layout>& contents() const;
  std::optional<std::size_t> field_index(std::string_view name) const noexcept;
  /// Throws UnknownFieldError listing the fields.
  const Layout& field(std::string_view name) const;

  /// Same node with a different form_key.
  Layout with_form_key(std::string key) const;

  /// Identity comparison (same node object).
  bool same(const Layout& other) const noexcept { return node_ == other.node_; }

  std::size_t node_count() const noexcept;

 private:
  struct Node;
  explicit Layout(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Violation {
  std::string form_key;
  std::string rule;
};

class ValidationReport {
 public:
  bool ok() const noexcept { return violations_.empty(); }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  void add(std::string form_key, std::string rule) {
    violations_.push_back({std::move(form_key), std::move(rule)});
  }
  /// One line per violation: "<form_key>: <rule>".
  std::string to_string() const;

 private:
  std::vector<Violation> violations_;
};

ValidationReport validate(const Layout& layout);

/// Type without the outer length, e.g. "var * {x: int64, y: var * float64}".
std::string type_string(const Layout& layout);
/// "<outer_length> * <type>".
std::string type_string(const Layout& layout, std::int64_t outer_length);

/// First `n` elements, sharing buffers. Requires a valid layout and n <= length.
Layout clip(const Layout& layout, std::int64_t n);

}  // namespace raggedcore

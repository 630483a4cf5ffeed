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
#include <string>
#include <string_view>
#include <vector>

#include "raggedcore/layout.hpp"
#include "raggedcore/value.hpp"

namespace raggedcore {

/// Flattened, pointer-linked description of one layout node. Views walk these
/// instead of the Layout tree so that a traversal step touches only plain
/// data: the node kind, its dtype, and a slot into the BufferTable.
struct NodeDescriptor {
  NodeKind kind = NodeKind::primitive;
  PrimitiveType dtype = PrimitiveType::float64;
  std::uint32_t buffer_slot = 0;  // data (primitive) or offsets (list); unused for records
  std::int64_t length = 0;
  std::vector<const NodeDescriptor*> children;
  std::vector<std::string> fields;
  std::string form_key;

  /// Child index for a record field; throws UnknownFieldError.
  std::size_t field_index(std::string_view name) const;
};

/// Registry of every buffer an array references, indexed by buffer_slot.
class BufferTable {
 public:
  const std::byte* operator[](std::uint32_t slot) const noexcept { return slots_[slot]; }
  std::size_t size() const noexcept { return slots_.size(); }
  std::uint32_t add(const std::byte* p) {
    slots_.push_back(p);
    return static_cast<std::uint32_t>(slots_.size() - 1);
  }

 private:
  std::vector<const std::byte*> slots_;
};

namespace detail {

struct ArrayState {
  explicit ArrayState(Layout l) : layout(std::move(l)) {}

  Layout layout;
  std::int64_t length = 0;
  std::vector<NodeDescriptor> descriptors;  // descriptors[0] is the root; never resized after build
  BufferTable buffers;
};

}  // namespace detail

/// A validated layout together with its outer length and traversal metadata.
/// Copies share state.
class Array {
 public:
  /// Validates `layout`; throws ValidationError listing every violation.
  explicit Array(Layout layout);

  const Layout& layout() const noexcept { return state_->layout; }
  std::int64_t length() const noexcept { return state_->length; }

  /// e.g. "3 * var * {x: int64, y: var * float64}".
  std::string type_string() const;

  /// Negative indices count from the end. Throws RangeError.
  Value get_item(std::int64_t index) const;

  /// Projects a record field through any wrapping lists, sharing buffers.
  /// Throws UnknownFieldError or TypeError (no record on the list path).
  Array get_field(std::string_view name) const;

  /// All elements as a compact JSON array.
  std::string to_json() const;
  std::vector<Value> to_values() const;

  const NodeDescriptor& root_descriptor() const noexcept { return state_->descriptors.front(); }
  const BufferTable& buffer_table() const noexcept { return state_->buffers; }

 private:
  std::shared_ptr<const detail::ArrayState> state_;
};

/// Materializes element `i` (0 <= i < layout.length()) of a valid layout.
Value materialize(const Layout& layout, std::int64_t i);

}  // namespace raggedcore

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

#include "raggedcore/view.hpp"

#include "raggedcore/errors.hpp"

namespace raggedcore {

ArrayView view_of(const Array& array) noexcept {
  return ArrayView(0, array.length(), &array.root_descriptor(), &array.buffer_table());
}

Scalar ArrayView::scalar_unchecked(std::int64_t i) const noexcept {
  const std::byte* base = (*buffers_)[node_->buffer_slot];
  auto at = static_cast<std::size_t>(start_ + i);
  switch (node_->dtype) {
    case PrimitiveType::int32:
      return load_le<std::int32_t>(base + at * 4);
    case PrimitiveType::int64:
      return load_le<std::int64_t>(base + at * 8);
    case PrimitiveType::uint32:
      return load_le<std::uint32_t>(base + at * 4);
    case PrimitiveType::float32:
      return load_le<float>(base + at * 4);
    case PrimitiveType::float64:
      return load_le<double>(base + at * 8);
    case PrimitiveType::bool8:
      return load_le<std::uint8_t>(base + at) != 0;
  }
  return false;
}

double ArrayView::number_unchecked(std::int64_t i) const noexcept {
  const std::byte* base = (*buffers_)[node_->buffer_slot];
  auto at = static_cast<std::size_t>(start_ + i);
  switch (node_->dtype) {
    case PrimitiveType::int32:
      return load_le<std::int32_t>(base + at * 4);
    case PrimitiveType::int64:
      return static_cast<double>(load_le<std::int64_t>(base + at * 8));
    case PrimitiveType::uint32:
      return load_le<std::uint32_t>(base + at * 4);
    case PrimitiveType::float32:
      return load_le<float>(base + at * 4);
    case PrimitiveType::float64:
      return load_le<double>(base + at * 8);
    case PrimitiveType::bool8:
      return load_le<std::uint8_t>(base + at) != 0 ? 1.0 : 0.0;
  }
  return 0.0;
}

Element ArrayView::at_unchecked(std::int64_t i) const noexcept {
  switch (node_->kind) {
    case NodeKind::primitive:
      return scalar_unchecked(i);
    case NodeKind::list_offset: {
      const std::byte* offsets = (*buffers_)[node_->buffer_slot];
      auto at = static_cast<std::size_t>(start_ + i);
      auto begin = load_le<std::int64_t>(offsets + at * 8);
      auto end = load_le<std::int64_t>(offsets + (at + 1) * 8);
      return ArrayView(begin, end, node_->children.front(), buffers_);
    }
    case NodeKind::record:
      break;
  }
  return RecordView(start_ + i, node_, buffers_);
}

Element ArrayView::operator[](std::int64_t i) const {
  if (i < 0 || i >= size()) {
    throw RangeError("index " + std::to_string(i) + " out of range for length " +
                     std::to_string(size()));
  }
  return at_unchecked(i);
}

Element RecordView::field(std::size_t i) const {
  if (i >= node_->children.size()) {
    throw RangeError("field index " + std::to_string(i) + " out of range");
  }
  // One-element view over the field's node, then take its only element.
  return ArrayView(at_, at_ + 1, node_->children[i], buffers_).at_unchecked(0);
}

Element RecordView::field(std::string_view name) const { return field(node_->field_index(name)); }

Scalar Element::scalar() const {
  if (const auto* s = std::get_if<Scalar>(&v_)) return *s;
  throw TypeError(is_list() ? "expected a scalar, got a list" : "expected a scalar, got a record");
}

ArrayView Element::list() const {
  if (const auto* v = std::get_if<ArrayView>(&v_)) return *v;
  throw TypeError(is_scalar() ? "expected a list, got a scalar" : "expected a list, got a record");
}

RecordView Element::record() const {
  if (const auto* r = std::get_if<RecordView>(&v_)) return *r;
  throw TypeError(is_scalar() ? "expected a record, got a scalar" : "expected a record, got a list");
}

double Element::number() const { return to_double(scalar()); }

Value Element::materialize() const {
  if (is_scalar()) return std::get<Scalar>(v_);
  if (is_list()) {
    Value::List out;
    for (const Element& e : std::get<ArrayView>(v_)) out.push_back(e.materialize());
    return out;
  }
  const auto& r = std::get<RecordView>(v_);
  Value::Record out;
  for (std::size_t i = 0; i < r.size(); ++i) out.emplace_back(r.fields()[i], r.field(i).materialize());
  return out;
}

}  // namespace raggedcore

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

#include "raggedcore/array.hpp"

#include "raggedcore/errors.hpp"

namespace raggedcore {

std::size_t NodeDescriptor::field_index(std::string_view name) const {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == name) return i;
  }
  std::string list;
  for (const auto& f : fields) list += (list.empty() ? "" : ", ") + f;
  throw UnknownFieldError("no field '" + std::string(name) + "' (available: {" + list + "})",
                          std::string(name), fields);
}

namespace {

const NodeDescriptor* describe(const Layout& layout, detail::ArrayState& state) {
  state.descriptors.emplace_back();
  NodeDescriptor* d = &state.descriptors.back();
  d->kind = layout.kind();
  d->length = layout.length();
  d->form_key = layout.form_key();
  switch (layout.kind()) {
    case NodeKind::primitive:
      d->dtype = layout.dtype();
      d->buffer_slot = state.buffers.add(layout.data().data());
      break;
    case NodeKind::list_offset:
      d->buffer_slot = state.buffers.add(layout.offsets().data());
      d->children.push_back(describe(layout.content(), state));
      break;
    case NodeKind::record:
      d->fields = layout.fields();
      for (const auto& c : layout.contents()) d->children.push_back(describe(c, state));
      break;
  }
  return d;
}

}  // namespace

Array::Array(Layout layout) {
  ValidationReport report = validate(layout);
  if (!report.ok()) throw ValidationError("invalid layout:\n" + report.to_string());
  auto state = std::make_shared<detail::ArrayState>(std::move(layout));
  state->length = state->layout.length();
  // Exact reservation keeps descriptor addresses stable while linking children.
  state->descriptors.reserve(state->layout.node_count());
  describe(state->layout, *state);
  state_ = std::move(state);
}

std::string Array::type_string() const { return raggedcore::type_string(layout(), length()); }

Value materialize(const Layout& layout, std::int64_t i) {
  switch (layout.kind()) {
    case NodeKind::primitive: {
      const Buffer& data = layout.data();
      auto at = static_cast<std::size_t>(i);
      switch (layout.dtype()) {
        case PrimitiveType::int32:
          return Scalar{data.get<std::int32_t>(at)};
        case PrimitiveType::int64:
          return Scalar{data.get<std::int64_t>(at)};
        case PrimitiveType::uint32:
          return Scalar{data.get<std::uint32_t>(at)};
        case PrimitiveType::float32:
          return Scalar{data.get<float>(at)};
        case PrimitiveType::float64:
          return Scalar{data.get<double>(at)};
        case PrimitiveType::bool8:
          return Scalar{data.get<std::uint8_t>(at) != 0};
      }
      break;
    }
    case NodeKind::list_offset: {
      Value::List out;
      std::int64_t begin = layout.offset(i);
      std::int64_t end = layout.offset(i + 1);
      out.reserve(static_cast<std::size_t>(end - begin));
      for (std::int64_t j = begin; j < end; ++j) out.push_back(materialize(layout.content(), j));
      return out;
    }
    case NodeKind::record: {
      Value::Record out;
      for (std::size_t f = 0; f < layout.fields().size(); ++f) {
        out.emplace_back(layout.fields()[f], materialize(layout.contents()[f], i));
      }
      return out;
    }
  }
  return {};
}

Value Array::get_item(std::int64_t index) const {
  std::int64_t n = length();
  std::int64_t i = index < 0 ? n + index : index;
  if (i < 0 || i >= n) {
    throw RangeError("index " + std::to_string(index) + " out of range for length " +
                     std::to_string(n));
  }
  return materialize(layout(), i);
}

namespace {

Layout project(const Layout& node, std::string_view name) {
  switch (node.kind()) {
    case NodeKind::record:
      return node.field(name);
    case NodeKind::list_offset:
      return Layout::list_offset(node.offsets(), project(node.content(), name), node.form_key());
    case NodeKind::primitive:
      break;
  }
  throw TypeError("cannot select field '" + std::string(name) +
                  "': no record reachable through lists");
}

}  // namespace

Array Array::get_field(std::string_view name) const { return Array(project(layout(), name)); }

std::vector<Value> Array::to_values() const {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (std::int64_t i = 0; i < length(); ++i) out.push_back(materialize(layout(), i));
  return out;
}

std::string Array::to_json() const {
  std::string out = "[";
  for (std::int64_t i = 0; i < length(); ++i) {
    if (i) out += ',';
    materialize(layout(), i).append_json(out);
  }
  return out + "]";
}

}  // namespace raggedcore

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

#include "raggedcore/builder.hpp"

#include <cstring>
#include <utility>

#include <json.hpp>

#include "raggedcore/array.hpp"
#include "raggedcore/value.hpp"
#include "raggedcore/view.hpp"

namespace raggedcore {

// --- GrowableBuffer ---------------------------------------------------------

std::byte* GrowableBuffer::grow_one() {
  if (length_ == capacity_) {
    std::size_t next = capacity_ == 0 ? kInitialCapacity : capacity_ * 2;
    auto storage = allocate_storage(next * width_);
    if (length_ > 0) std::memcpy(storage.get(), storage_.get(), length_ * width_);
    storage_ = std::move(storage);
    capacity_ = next;
  }
  return storage_.get() + (length_++) * width_;
}

Buffer GrowableBuffer::share() const noexcept {
  if (!storage_) return Buffer();
  return Buffer(std::shared_ptr<const std::byte>(storage_), length_ * width_);
}

void GrowableBuffer::clear() noexcept {
  length_ = 0;
  if (storage_.use_count() > 1) {
    // A snapshot still references these bytes; new appends must not touch them.
    storage_.reset();
    capacity_ = 0;
  }
}

// --- Builder ----------------------------------------------------------------

ArrayPackage Builder::snapshot() const {
  check_ready("root");
  return to_buffers(layout(), length().value_or(0));
}

Array Builder::to_array() const { return from_buffers(snapshot()); }

// --- PrimitiveBuilder -------------------------------------------------------

void PrimitiveBuilder::append(Scalar value) {
  Scalar v = convert(value, dtype_);
  switch (dtype_) {
    case PrimitiveType::int32:
      data_.append(std::get<std::int32_t>(v));
      break;
    case PrimitiveType::int64:
      data_.append(std::get<std::int64_t>(v));
      break;
    case PrimitiveType::uint32:
      data_.append(std::get<std::uint32_t>(v));
      break;
    case PrimitiveType::float32:
      data_.append(std::get<float>(v));
      break;
    case PrimitiveType::float64:
      data_.append(std::get<double>(v));
      break;
    case PrimitiveType::bool8:
      data_.append(static_cast<std::uint8_t>(std::get<bool>(v) ? 1 : 0));
      break;
  }
}

Layout PrimitiveBuilder::layout() const { return Layout::primitive(dtype_, data_.share()); }

// --- ListOffsetBuilder ------------------------------------------------------

ListOffsetBuilder::ListOffsetBuilder(std::unique_ptr<Builder> content)
    : content_(std::move(content)) {
  if (!content_) throw ValueError("list builder needs a content builder");
  offsets_.append<std::int64_t>(0);
}

Builder& ListOffsetBuilder::begin_list() {
  if (open_) throw StateError("begin_list called while a list is already open");
  open_ = true;
  return *content_;
}

void ListOffsetBuilder::end_list() {
  if (!open_) throw StateError("end_list called without begin_list");
  auto n = content_->length();
  if (!n) throw StateError("end_list: content record has fields of unequal length");
  offsets_.append<std::int64_t>(*n);
  open_ = false;
}

void ListOffsetBuilder::clear() noexcept {
  content_->clear();
  offsets_.clear();
  offsets_.append<std::int64_t>(0);
  open_ = false;
}

void ListOffsetBuilder::check_ready(const std::string& path) const {
  if (open_) throw StateError(path + ": list is open (begin_list without end_list)");
  content_->check_ready(path + "[]");
  auto last = offsets_.get<std::int64_t>(offsets_.length() - 1);
  auto n = content_->length().value_or(-1);
  if (n != last) {
    throw StateError(path + ": content has " + std::to_string(n) + " elements but offsets end at " +
                     std::to_string(last) + " (append outside begin_list/end_list)");
  }
}

Layout ListOffsetBuilder::layout() const {
  return Layout::list_offset(offsets_.share(), content_->layout());
}

// --- RecordBuilder ----------------------------------------------------------

RecordBuilder::RecordBuilder(FieldMap fields_map, std::vector<RecordField> fields) {
  for (auto& f : fields) {
    auto it = fields_map.find(f.id);
    if (it == fields_map.end()) {
      throw ValueError("field identifier " + std::to_string(f.id) + " has no name in the field map");
    }
    if (!f.builder) throw ValueError("field '" + it->second + "' has no builder");
    for (const auto& e : entries_) {
      if (e.id == f.id || e.name == it->second) {
        throw ValueError("duplicate field '" + it->second + "'");
      }
    }
    entries_.push_back({f.id, it->second, std::move(f.builder)});
  }
}

std::string RecordBuilder::known_fields() const {
  std::string out;
  for (const auto& e : entries_) {
    out += (out.empty() ? "" : ", ") + std::to_string(e.id) + ":" + e.name;
  }
  return "{" + out + "}";
}

Builder& RecordBuilder::field(std::size_t id) {
  for (auto& e : entries_) {
    if (e.id == id) return *e.builder;
  }
  std::vector<std::string> names;
  for (const auto& e : entries_) names.push_back(e.name);
  throw UnknownFieldError("unknown field identifier " + std::to_string(id) + " (known: " +
                              known_fields() + ")",
                          std::to_string(id), std::move(names));
}

Builder& RecordBuilder::field(std::string_view name) {
  for (auto& e : entries_) {
    if (e.name == name) return *e.builder;
  }
  std::vector<std::string> names;
  for (const auto& e : entries_) names.push_back(e.name);
  throw UnknownFieldError("unknown field '" + std::string(name) + "' (known: " + known_fields() +
                              ")",
                          std::string(name), std::move(names));
}

std::optional<std::int64_t> RecordBuilder::length() const {
  if (entries_.empty()) return 0;
  auto first = entries_.front().builder->length();
  for (const auto& e : entries_) {
    if (e.builder->length() != first) return std::nullopt;
  }
  return first;
}

void RecordBuilder::clear() noexcept {
  for (auto& e : entries_) e.builder->clear();
}

Form RecordBuilder::form() const {
  std::vector<std::string> names;
  std::vector<Form> contents;
  for (const auto& e : entries_) {
    names.push_back(e.name);
    contents.push_back(e.builder->form());
  }
  return Form::record(std::move(names), std::move(contents));
}

void RecordBuilder::check_ready(const std::string& path) const {
  for (const auto& e : entries_) e.builder->check_ready(path + "." + e.name);
  if (!length()) {
    std::string detail;
    for (const auto& e : entries_) {
      auto n = e.builder->length();
      detail += (detail.empty() ? "" : ", ") + e.name + "=" + (n ? std::to_string(*n) : "?");
    }
    throw StateError(path + ": ragged record, fields have unequal lengths (" + detail + ")");
  }
}

Layout RecordBuilder::layout() const {
  std::vector<std::string> names;
  std::vector<Layout> contents;
  for (const auto& e : entries_) {
    names.push_back(e.name);
    contents.push_back(e.builder->layout());
  }
  return Layout::record(std::move(names), std::move(contents), length().value_or(0));
}

// --- construction from a form -----------------------------------------------

std::unique_ptr<Builder> make_builder(const Form& form) {
  switch (form.kind()) {
    case NodeKind::primitive:
      return std::make_unique<PrimitiveBuilder>(form.dtype());
    case NodeKind::list_offset:
      return std::make_unique<ListOffsetBuilder>(make_builder(form.content()));
    case NodeKind::record: {
      FieldMap names;
      std::vector<RecordField> fields;
      for (std::size_t i = 0; i < form.fields().size(); ++i) {
        names.emplace(i, form.fields()[i]);
        fields.push_back({i, make_builder(form.contents()[i])});
      }
      return std::make_unique<RecordBuilder>(std::move(names), std::move(fields));
    }
  }
  return nullptr;
}

// --- generic appends ----------------------------------------------------------

namespace {

[[noreturn]] void mismatch(const Builder& b, const std::string& got) {
  throw TypeError("expected " + b.form().type_string() + ", got " + got);
}

const char* describe(const Element& e) {
  return e.is_scalar() ? "a scalar" : e.is_list() ? "a list" : "a record";
}

const char* describe(const Value& v) {
  return v.is_scalar() ? "a scalar" : v.is_list() ? "a list" : "a record";
}

}  // namespace

void append_element(Builder& builder, const Element& element) {
  switch (builder.kind()) {
    case NodeKind::primitive:
      if (!element.is_scalar()) mismatch(builder, describe(element));
      static_cast<PrimitiveBuilder&>(builder).append(element.scalar());
      return;
    case NodeKind::list_offset: {
      if (!element.is_list()) mismatch(builder, describe(element));
      auto& list = static_cast<ListOffsetBuilder&>(builder);
      Builder& content = list.begin_list();
      for (const Element& item : element.list()) append_element(content, item);
      list.end_list();
      return;
    }
    case NodeKind::record: {
      if (!element.is_record()) mismatch(builder, describe(element));
      auto& record = static_cast<RecordBuilder&>(builder);
      RecordView rv = element.record();
      for (std::size_t i = 0; i < record.field_count(); ++i) {
        append_element(record.field_at(i), rv.field(record.field_name(i)));
      }
      return;
    }
  }
}

void append_value(Builder& builder, const Value& value) {
  switch (builder.kind()) {
    case NodeKind::primitive:
      if (!value.is_scalar()) mismatch(builder, describe(value));
      static_cast<PrimitiveBuilder&>(builder).append(value.scalar());
      return;
    case NodeKind::list_offset: {
      if (!value.is_list()) mismatch(builder, describe(value));
      auto& list = static_cast<ListOffsetBuilder&>(builder);
      Builder& content = list.begin_list();
      for (const Value& item : value.list()) append_value(content, item);
      list.end_list();
      return;
    }
    case NodeKind::record: {
      if (!value.is_record()) mismatch(builder, describe(value));
      auto& record = static_cast<RecordBuilder&>(builder);
      if (value.record().size() != record.field_count()) {
        mismatch(builder, "a record with " + std::to_string(value.record().size()) + " fields");
      }
      for (std::size_t i = 0; i < record.field_count(); ++i) {
        append_value(record.field_at(i), value.field(record.field_name(i)));
      }
      return;
    }
  }
}

namespace {

using nlohmann::json;

std::string json_kind(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return "null";
    case json::value_t::boolean:
      return "a bool";
    case json::value_t::string:
      return "a string";
    case json::value_t::array:
      return "a list";
    case json::value_t::object:
      return "a record";
    default:
      return "a number";
  }
}

void append_json_node(Builder& builder, const json& j) {
  switch (builder.kind()) {
    case NodeKind::primitive: {
      auto& prim = static_cast<PrimitiveBuilder&>(builder);
      Scalar s;
      if (j.is_boolean()) {
        s = j.get<bool>();
      } else if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if (std::in_range<std::int64_t>(u)) {
          s = static_cast<std::int64_t>(u);
        } else {
          s = static_cast<double>(u);
        }
      } else if (j.is_number_integer()) {
        s = j.get<std::int64_t>();
      } else if (j.is_number_float()) {
        s = j.get<double>();
      } else {
        mismatch(builder, json_kind(j));
      }
      if ((prim.dtype() == PrimitiveType::bool8) != j.is_boolean()) mismatch(builder, json_kind(j));
      prim.append(s);
      return;
    }
    case NodeKind::list_offset: {
      if (!j.is_array()) mismatch(builder, json_kind(j));
      auto& list = static_cast<ListOffsetBuilder&>(builder);
      Builder& content = list.begin_list();
      for (const auto& item : j) append_json_node(content, item);
      list.end_list();
      return;
    }
    case NodeKind::record: {
      if (!j.is_object()) mismatch(builder, json_kind(j));
      auto& record = static_cast<RecordBuilder&>(builder);
      for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (std::size_t i = 0; i < record.field_count(); ++i) known |= record.field_name(i) == key;
        if (!known) mismatch(builder, "a record with unexpected field '" + key + "'");
      }
      for (std::size_t i = 0; i < record.field_count(); ++i) {
        auto it = j.find(record.field_name(i));
        if (it == j.end()) {
          mismatch(builder, "a record without field '" + record.field_name(i) + "'");
        }
        append_json_node(record.field_at(i), *it);
      }
      return;
    }
  }
}

}  // namespace

void append_json(Builder& builder, std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  append_json_node(builder, doc);
}

}  // namespace raggedcore

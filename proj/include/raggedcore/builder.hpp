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

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raggedcore/buffer.hpp"
#include "raggedcore/dtype.hpp"
#include "raggedcore/errors.hpp"
#include "raggedcore/form.hpp"
#include "raggedcore/interchange.hpp"
#include "raggedcore/layout.hpp"

namespace raggedcore {

class Element;
class Value;

/// Append-only byte storage of fixed-width elements. Capacity starts at
/// kInitialCapacity elements and doubles. Growth reallocates, so bytes already
/// shared through share() are never written again.
class GrowableBuffer {
 public:
  static constexpr std::size_t kInitialCapacity = 1024;

  explicit GrowableBuffer(std::size_t element_width) : width_(element_width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t capacity() const noexcept { return capacity_; }
  const std::byte* data() const noexcept { return storage_.get(); }

  template <class T>
  void append(T value) {
    std::byte* slot = grow_one();
    store_le<T>(slot, value);
  }

  template <class T>
  T get(std::size_t i) const noexcept {
    return load_le<T>(storage_.get() + i * width_);
  }

  /// The first length() elements as a Buffer sharing this storage.
  Buffer share() const noexcept;

  /// Resets length to 0. Keeps the allocation unless a snapshot still holds it.
  void clear() noexcept;

 private:
  std::byte* grow_one();

  std::size_t width_;
  std::size_t length_ = 0;
  std::size_t capacity_ = 0;
  std::shared_ptr<std::byte> storage_;
};

/// Run-time composed layout builder. Concrete nodes: PrimitiveBuilder,
/// ListOffsetBuilder, RecordBuilder.
class Builder {
 public:
  virtual ~Builder() = default;
  Builder() = default;
  Builder(const Builder&) = delete;
  Builder& operator=(const Builder&) = delete;

  virtual NodeKind kind() const noexcept = 0;

  /// Element count; nullopt for a record whose fields have unequal lengths.
  virtual std::optional<std::int64_t> length() const = 0;

  /// Drops all content. Offsets are reseeded with a single 0.
  virtual void clear() noexcept = 0;

  virtual Form form() const = 0;

  /// Shares the current contents as a package with pre-order form keys.
  /// Throws StateError if any list is open or any record is ragged.
  ArrayPackage snapshot() const;

  /// from_buffers(snapshot()).
  Array to_array() const;

  /// Throws StateError describing the first reason a snapshot is impossible.
  virtual void check_ready(const std::string& path) const = 0;

  /// Layout over the current storage; assumes check_ready passed.
  virtual Layout layout() const = 0;
};

class PrimitiveBuilder final : public Builder {
 public:
  explicit PrimitiveBuilder(PrimitiveType dtype) : dtype_(dtype), data_(width(dtype)) {}

  PrimitiveType dtype() const noexcept { return dtype_; }
  const GrowableBuffer& buffer() const noexcept { return data_; }

  /// Stores `value` converted to dtype(). Throws RangeError when the value is
  /// not representable and TypeError when mixing bool and numbers.
  void append(Scalar value);

  NodeKind kind() const noexcept override { return NodeKind::primitive; }
  std::optional<std::int64_t> length() const override {
    return static_cast<std::int64_t>(data_.length());
  }
  void clear() noexcept override { data_.clear(); }
  Form form() const override { return Form::numpy(dtype_); }
  void check_ready(const std::string&) const override {}
  Layout layout() const override;

 private:
  PrimitiveType dtype_;
  GrowableBuffer data_;
};

class ListOffsetBuilder final : public Builder {
 public:
  explicit ListOffsetBuilder(std::unique_ptr<Builder> content);

  /// Opens a list and returns the content builder to append into. Throws
  /// StateError if a list is already open on this node.
  Builder& begin_list();
  template <class B>
  B& begin_list() {
    return cast_builder<B>(begin_list());
  }

  /// Closes the open list at the current content length. Throws StateError
  /// if no list is open or the content is a ragged record.
  void end_list();

  bool is_open() const noexcept { return open_; }
  Builder& content() noexcept { return *content_; }
  const Builder& content() const noexcept { return *content_; }
  const GrowableBuffer& offsets() const noexcept { return offsets_; }

  NodeKind kind() const noexcept override { return NodeKind::list_offset; }
  std::optional<std::int64_t> length() const override {
    return static_cast<std::int64_t>(offsets_.length()) - 1;
  }
  void clear() noexcept override;
  Form form() const override { return Form::list_offset(content_->form()); }
  void check_ready(const std::string& path) const override;
  Layout layout() const override;

  template <class B>
  static B& cast_builder(Builder& b) {
    auto* out = dynamic_cast<B*>(&b);
    if (out == nullptr) throw TypeError("builder is not of the requested kind");
    return *out;
  }

 private:
  std::unique_ptr<Builder> content_;
  GrowableBuffer offsets_{sizeof(std::int64_t)};
  bool open_ = false;
};

/// Identifier -> name, as supplied by the user.
using FieldMap = std::map<std::size_t, std::string>;

struct RecordField {
  std::size_t id;
  std::unique_ptr<Builder> builder;
};

/// Fields are kept in construction order; names come from the FieldMap.
class RecordBuilder final : public Builder {
 public:
  RecordBuilder(FieldMap fields_map, std::vector<RecordField> fields);

  template <class... Fields>
  explicit RecordBuilder(FieldMap fields_map, RecordField first, Fields... rest)
      : RecordBuilder(std::move(fields_map), pack(std::move(first), std::move(rest)...)) {}

  /// Throws UnknownFieldError listing the known fields.
  Builder& field(std::size_t id);
  Builder& field(std::string_view name);
  template <class B>
  B& field(std::size_t id) {
    return ListOffsetBuilder::cast_builder<B>(field(id));
  }
  template <class B>
  B& field(std::string_view name) {
    return ListOffsetBuilder::cast_builder<B>(field(name));
  }

  std::size_t field_count() const noexcept { return entries_.size(); }
  Builder& field_at(std::size_t position) { return *entries_.at(position).builder; }
  const std::string& field_name(std::size_t position) const { return entries_.at(position).name; }

  NodeKind kind() const noexcept override { return NodeKind::record; }
  /// Common field length; nullopt when fields disagree. 0 with no fields.
  std::optional<std::int64_t> length() const override;
  void clear() noexcept override;
  Form form() const override;
  void check_ready(const std::string& path) const override;
  Layout layout() const override;

 private:
  template <class... Fields>
  static std::vector<RecordField> pack(Fields... fields) {
    std::vector<RecordField> out;
    out.reserve(sizeof...(fields));
    (out.push_back(std::move(fields)), ...);
    return out;
  }

  struct Entry {
    std::size_t id;
    std::string name;
    std::unique_ptr<Builder> builder;
  };
  std::vector<Entry> entries_;
  std::string known_fields() const;
};

/// Builder tree mirroring `form`; record field identifiers are positions.
std::unique_ptr<Builder> make_builder(const Form& form);

/// Appends one complete element (scalar, list or record) into `builder`,
/// recursing through lists and records. Throws TypeError on shape mismatch.
void append_element(Builder& builder, const Element& element);
void append_value(Builder& builder, const Value& value);
/// `json_text` holds one JSON value. TypeError messages name the expected type.
void append_json(Builder& builder, std::string_view json_text);

}  // namespace raggedcore

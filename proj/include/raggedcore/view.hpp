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
#include <iterator>
#include <string_view>
#include <variant>

#include "raggedcore/array.hpp"
#include "raggedcore/dtype.hpp"

namespace raggedcore {

class Element;

/// Constant-size, non-owning handle over elements [start, stop) of one node.
/// Like std::span, a view borrows from its Array and must not outlive it.
class ArrayView {
 public:
  ArrayView() = default;
  ArrayView(std::int64_t start, std::int64_t stop, const NodeDescriptor* node,
            const BufferTable* buffers) noexcept
      : start_(start), stop_(stop), node_(node), buffers_(buffers) {}

  std::int64_t size() const noexcept { return stop_ - start_; }
  bool empty() const noexcept { return stop_ == start_; }
  std::int64_t start() const noexcept { return start_; }
  std::int64_t stop() const noexcept { return stop_; }
  const NodeDescriptor& node() const noexcept { return *node_; }
  const BufferTable& buffers() const noexcept { return *buffers_; }

  /// Bounds-checked; throws RangeError.
  Element operator[](std::int64_t i) const;
  /// Unchecked variant used by iteration.
  Element at_unchecked(std::int64_t i) const noexcept;

  /// For primitive nodes: element i widened to double, unchecked.
  double number_unchecked(std::int64_t i) const noexcept;
  Scalar scalar_unchecked(std::int64_t i) const noexcept;

  class iterator;
  iterator begin() const noexcept;
  iterator end() const noexcept;

 private:
  std::int64_t start_ = 0;
  std::int64_t stop_ = 0;
  const NodeDescriptor* node_ = nullptr;
  const BufferTable* buffers_ = nullptr;
};

/// One element of a record node.
class RecordView {
 public:
  RecordView(std::int64_t at, const NodeDescriptor* node, const BufferTable* buffers) noexcept
      : at_(at), node_(node), buffers_(buffers) {}

  std::int64_t index() const noexcept { return at_; }
  const std::vector<std::string>& fields() const noexcept { return node_->fields; }
  std::size_t size() const noexcept { return node_->fields.size(); }

  /// Throws UnknownFieldError listing the record's fields.
  Element field(std::string_view name) const;
  Element field(std::size_t i) const;

 private:
  std::int64_t at_;
  const NodeDescriptor* node_;
  const BufferTable* buffers_;
};

/// What indexing a view yields: a scalar, a nested list, or a record.
class Element {
 public:
  Element(Scalar s) noexcept : v_(s) {}  // NOLINT(google-explicit-constructor)
  Element(ArrayView v) noexcept : v_(v) {}  // NOLINT
  Element(RecordView r) noexcept : v_(r) {}  // NOLINT

  bool is_scalar() const noexcept { return v_.index() == 0; }
  bool is_list() const noexcept { return v_.index() == 1; }
  bool is_record() const noexcept { return v_.index() == 2; }

  /// Each throws TypeError when the element is something else.
  Scalar scalar() const;
  ArrayView list() const;
  RecordView record() const;

  /// Scalar widened to double; throws TypeError for non-scalars.
  double number() const;

  /// Record shorthand: element.record().field(name).
  Element operator[](std::string_view name) const { return record().field(name); }
  /// List shorthand: element.list()[i].
  Element operator[](std::int64_t i) const { return list()[i]; }

  Value materialize() const;

 private:
  std::variant<Scalar, ArrayView, RecordView> v_;
};

class ArrayView::iterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = Element;
  using difference_type = std::ptrdiff_t;
  using pointer = void;
  using reference = Element;

  iterator() = default;
  iterator(const ArrayView& view, std::int64_t i) noexcept : view_(view), i_(i) {}

  Element operator*() const noexcept { return view_.at_unchecked(i_); }
  iterator& operator++() noexcept {
    ++i_;
    return *this;
  }
  iterator operator++(int) noexcept {
    auto old = *this;
    ++i_;
    return old;
  }
  bool operator==(const iterator& other) const noexcept { return i_ == other.i_; }

 private:
  ArrayView view_;
  std::int64_t i_ = 0;
};

inline ArrayView::iterator ArrayView::begin() const noexcept { return {*this, 0}; }
inline ArrayView::iterator ArrayView::end() const noexcept { return {*this, size()}; }

/// O(1): a view over every element of `array`.
ArrayView view_of(const Array& array) noexcept;

static_assert(sizeof(ArrayView) <= 64, "ArrayView must stay a small stack handle");

}  // namespace raggedcore

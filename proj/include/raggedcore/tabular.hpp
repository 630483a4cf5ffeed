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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raggedcore/array.hpp"
#include "raggedcore/view.hpp"

namespace raggedcore {

class ColumnSource;

/// Cursor over one column. Position it with set_entry, then read.
class ColumnReader {
 public:
  explicit ColumnReader(ArrayView column) noexcept : column_(column) {}

  /// Throws RangeError unless 0 <= entry < entry count.
  void set_entry(std::int64_t entry);
  std::int64_t entry() const noexcept { return entry_; }

  /// Scalar for primitive columns, a list view for var columns, a record view
  /// for record columns. Throws StateError before the first set_entry.
  Element read() const;

 private:
  ArrayView column_;
  std::int64_t entry_ = -1;
};

/// A record array presented as named columns with random-access entries.
/// Holds a reference to the array's storage; no data is copied.
class ColumnSource {
 public:
  std::int64_t entries() const noexcept { return array_.length(); }
  const std::vector<std::string>& column_names() const noexcept {
    return array_.layout().fields();
  }
  /// e.g. "var * float32". Throws UnknownFieldError.
  std::string column_type(std::string_view name) const;

  /// Throws UnknownFieldError naming the column and listing the available ones.
  ColumnReader reader(std::string_view column) const;

  const Array& array() const noexcept { return array_; }

 private:
  friend ColumnSource to_tabular_source(const Array& array);
  explicit ColumnSource(Array array) : array_(std::move(array)) {}
  std::size_t column_index(std::string_view name) const;

  Array array_;
};

/// Throws TypeError unless the root is a record.
ColumnSource to_tabular_source(const Array& array);

/// Copies the named columns, in the given order, into a new record array.
/// Throws UnknownFieldError for a missing column.
Array from_tabular(const ColumnSource& source, std::span<const std::string> columns);

}  // namespace raggedcore

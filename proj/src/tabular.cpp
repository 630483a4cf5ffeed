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

#include "raggedcore/tabular.hpp"

#include "raggedcore/builder.hpp"
#include "raggedcore/errors.hpp"

namespace raggedcore {

void ColumnReader::set_entry(std::int64_t entry) {
  if (entry < 0 || entry >= column_.size()) {
    throw RangeError("entry " + std::to_string(entry) + " out of range for " +
                     std::to_string(column_.size()) + " entries");
  }
  entry_ = entry;
}

Element ColumnReader::read() const {
  if (entry_ < 0) throw StateError("read before set_entry");
  return column_.at_unchecked(entry_);
}

std::size_t ColumnSource::column_index(std::string_view name) const {
  if (auto i = array_.layout().field_index(name)) return *i;
  std::string list;
  for (const auto& c : column_names()) list += (list.empty() ? "" : ", ") + c;
  throw UnknownFieldError("unknown column '" + std::string(name) + "' (available: " + list + ")",
                          std::string(name), column_names());
}

std::string ColumnSource::column_type(std::string_view name) const {
  return type_string(array_.layout().contents()[column_index(name)]);
}

ColumnReader ColumnSource::reader(std::string_view column) const {
  const NodeDescriptor* node = array_.root_descriptor().children[column_index(column)];
  return ColumnReader(ArrayView(0, entries(), node, &array_.buffer_table()));
}

ColumnSource to_tabular_source(const Array& array) {
  if (array.layout().kind() != NodeKind::record) {
    throw TypeError("tabular source needs a record array, got " + array.type_string());
  }
  return ColumnSource(array);
}

Array from_tabular(const ColumnSource& source, std::span<const std::string> columns) {
  FieldMap names;
  std::vector<RecordField> fields;
  std::vector<ColumnReader> readers;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    readers.push_back(source.reader(columns[i]));
    const Layout& column = source.array().layout().field(columns[i]);
    names.emplace(i, columns[i]);
    fields.push_back({i, make_builder(form_of(column))});
  }
  RecordBuilder builder(std::move(names), std::move(fields));
  for (std::int64_t entry = 0; entry < source.entries(); ++entry) {
    for (std::size_t i = 0; i < readers.size(); ++i) {
      readers[i].set_entry(entry);
      append_element(builder.field_at(i), readers[i].read());
    }
  }
  // A zero-column selection still has one (empty) record per entry.
  if (columns.empty()) {
    return Array(Layout::record({}, {}, source.entries()));
  }
  return builder.to_array();
}

}  // namespace raggedcore

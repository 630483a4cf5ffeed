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

#include "raggedcore/kernels.hpp"

#include <cmath>

#include "raggedcore/builder.hpp"
#include "raggedcore/errors.hpp"

namespace raggedcore {

Array unflatten(const Array& content, std::span<const std::int64_t> counts) {
  std::vector<std::int64_t> offsets;
  offsets.reserve(counts.size() + 1);
  offsets.push_back(0);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      throw ValueError("count " + std::to_string(counts[i]) + " at index " + std::to_string(i) +
                       " is negative");
    }
    total += counts[i];
    offsets.push_back(total);
  }
  if (total != content.length()) {
    throw ValueError("counts sum to " + std::to_string(total) + " but content has " +
                     std::to_string(content.length()) + " elements");
  }
  return Array(Layout::list_offset(Buffer::from_values<std::int64_t>(offsets), content.layout()));
}

Flattened flatten(const Array& array) {
  const Layout& root = array.layout();
  if (root.kind() != NodeKind::list_offset) {
    throw TypeError("flatten needs a list array, got " + array.type_string());
  }
  Flattened out{Array(clip(root.content(), root.offset(array.length()))), {}};
  out.counts.reserve(static_cast<std::size_t>(array.length()));
  for (std::int64_t i = 0; i < array.length(); ++i) {
    out.counts.push_back(root.offset(i + 1) - root.offset(i));
  }
  return out;
}

namespace {

template <class Acc>
Buffer row_sums(const ArrayView& rows) {
  auto n = static_cast<std::size_t>(rows.size());
  auto storage = allocate_storage(n * sizeof(Acc));
  for (std::int64_t i = 0; i < rows.size(); ++i) {
    ArrayView row = rows.at_unchecked(i).list();
    Acc acc = 0;
    for (std::int64_t j = 0; j < row.size(); ++j) acc += static_cast<Acc>(row.number_unchecked(j));
    store_le<Acc>(storage.get() + static_cast<std::size_t>(i) * sizeof(Acc), acc);
  }
  return Buffer(std::move(storage), n * sizeof(Acc));
}

}  // namespace

Array sum_inner(const Array& array, PrimitiveType out_dtype) {
  const Layout& root = array.layout();
  if (root.kind() != NodeKind::list_offset || root.content().kind() != NodeKind::primitive ||
      !is_numeric(root.content().dtype())) {
    throw TypeError("sum_inner needs var * <number>, got " + array.type_string());
  }
  if (!is_floating(out_dtype)) {
    throw TypeError("sum_inner output must be float32 or float64, got " +
                    std::string(name(out_dtype)));
  }
  ArrayView rows = view_of(array);
  Buffer sums = out_dtype == PrimitiveType::float32 ? row_sums<float>(rows) : row_sums<double>(rows);
  return Array(Layout::primitive(out_dtype, std::move(sums)));
}

namespace {

void accumulate(const Element& e, double& total) {
  if (e.is_scalar()) {
    Scalar s = e.scalar();
    if (std::holds_alternative<bool>(s)) throw TypeError("sum_all: leaf is bool, not a number");
    total += to_double(s);
  } else if (e.is_list()) {
    for (const Element& item : e.list()) accumulate(item, total);
  } else {
    RecordView r = e.record();
    for (std::size_t f = 0; f < r.size(); ++f) accumulate(r.field(f), total);
  }
}

}  // namespace

double sum_all(const Array& array, std::span<const std::string> path) {
  Array target = array;
  for (const auto& name : path) {
    try {
      target = target.get_field(name);
    } catch (const UnknownFieldError& e) {
      throw TypeError(std::string("sum_all: cannot resolve path: ") + e.what());
    }
  }
  double total = 0.0;
  for (const Element& e : view_of(target)) accumulate(e, total);
  return total;
}

Array filter_rows(const Array& array, const RowPredicate& pred) {
  ArrayView rows = view_of(array);
  auto builder = make_builder(form_of(array.layout()));
  std::int64_t kept = 0;
  for (std::int64_t i = 0; i < rows.size(); ++i) {
    Element row = rows.at_unchecked(i);
    bool keep = false;
    try {
      keep = pred(row);
    } catch (const std::exception& e) {
      throw RowError(i, e.what());
    }
    if (keep) {
      append_element(*builder, row);
      ++kept;
    }
  }
  if (array.layout().kind() == NodeKind::record && array.layout().fields().empty()) {
    return Array(Layout::record({}, {}, kept));
  }
  return builder->to_array();
}

Array map_rows(const Array& array, const RowFunction& fn, PrimitiveType out_dtype) {
  ArrayView rows = view_of(array);
  PrimitiveBuilder out(out_dtype);
  for (std::int64_t i = 0; i < rows.size(); ++i) {
    try {
      out.append(fn(rows.at_unchecked(i)));
    } catch (const std::exception& e) {
      throw RowError(i, e.what());
    }
  }
  return out.to_array();
}

double dimuon_mass(const Element& event) {
  ArrayView pt = event["Muon_pt"].list();
  ArrayView eta = event["Muon_eta"].list();
  ArrayView phi = event["Muon_phi"].list();
  if (pt.size() < 2 || eta.size() < 2 || phi.size() < 2) {
    throw ValueError("dimuon_mass needs at least two muons");
  }
  double pt0 = pt.number_unchecked(0), pt1 = pt.number_unchecked(1);
  double deta = eta.number_unchecked(0) - eta.number_unchecked(1);
  double dphi = phi.number_unchecked(0) - phi.number_unchecked(1);
  return std::sqrt(2 * pt0 * pt1 * (std::cosh(deta) - std::cos(dphi)));
}

std::vector<std::string> missing_dimuon_columns(const Array& events) {
  std::vector<std::string> missing;
  const Layout& root = events.layout();
  for (const char* column : kDimuonColumns) {
    if (root.kind() != NodeKind::record || !root.field_index(column)) missing.emplace_back(column);
  }
  return missing;
}

DimuonResult dimuon_pipeline(const Array& events) {
  if (auto missing = missing_dimuon_columns(events); !missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw TypeError("events lack required columns: " + list);
  }
  Array two = filter_rows(events, [](const Element& e) { return e["nMuon"].number() == 2; });
  Array opposite = filter_rows(two, [](const Element& e) {
    ArrayView charge = e["Muon_charge"].list();
    return charge[0].number() != charge[1].number();
  });
  Array masses = map_rows(opposite, [](const Element& e) -> Scalar { return dimuon_mass(e); },
                          PrimitiveType::float64);
  return {std::move(opposite), std::move(masses)};
}

}  // namespace raggedcore

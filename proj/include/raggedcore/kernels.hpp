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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "raggedcore/array.hpp"
#include "raggedcore/dtype.hpp"
#include "raggedcore/view.hpp"

namespace raggedcore {

using RowPredicate = std::function<bool(const Element&)>;
using RowFunction = std::function<Scalar(const Element&)>;

/// List array over `content` with row i holding counts[i] elements. The
/// content buffers are shared. Throws ValueError on a negative count or when
/// sum(counts) != content.length().
Array unflatten(const Array& content, std::span<const std::int64_t> counts);

struct Flattened {
  Array content;
  std::vector<std::int64_t> counts;
};

/// Inverse of unflatten. Throws TypeError unless the root is a list.
Flattened flatten(const Array& array);

/// Per-row sum of a list of numbers, accumulated left to right in
/// `out_dtype` (float32 or float64). Empty rows give 0.
Array sum_inner(const Array& array, PrimitiveType out_dtype = PrimitiveType::float64);

/// Depth-first, left-to-right float64 sum of every leaf reached after
/// projecting `path` (record field names). Throws TypeError when the path or
/// the leaves are not numeric.
double sum_all(const Array& array, std::span<const std::string> path = {});

/// Rows where `pred` holds, copied in order. A throwing predicate surfaces as
/// RowError carrying the row index.
Array filter_rows(const Array& array, const RowPredicate& pred);

/// out[i] = fn(row i), converted to `out_dtype`. Failures surface as RowError.
Array map_rows(const Array& array, const RowFunction& fn, PrimitiveType out_dtype);

/// Invariant mass of the first two muons of an event record with fields
/// Muon_pt, Muon_eta, Muon_phi:
///   sqrt(2 pt0 pt1 (cosh(eta0 - eta1) - cos(phi0 - phi1))).
double dimuon_mass(const Element& event);

inline constexpr const char* kDimuonColumns[] = {"nMuon", "Muon_charge", "Muon_pt", "Muon_eta",
                                                 "Muon_phi"};

/// Columns from kDimuonColumns that `events` lacks (empty when runnable).
std::vector<std::string> missing_dimuon_columns(const Array& events);

struct DimuonResult {
  Array selected;  // events passing both filters
  Array masses;    // float64, one per selected event
};

/// filter(nMuon == 2) -> filter(charge[0] != charge[1]) -> map(dimuon_mass).
DimuonResult dimuon_pipeline(const Array& events);

}  // namespace raggedcore

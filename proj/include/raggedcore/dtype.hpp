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
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace raggedcore {

enum class PrimitiveType : std::uint8_t { int32, int64, uint32, float32, float64, bool8 };

constexpr std::size_t width(PrimitiveType t) noexcept {
  switch (t) {
    case PrimitiveType::int32:
    case PrimitiveType::uint32:
    case PrimitiveType::float32:
      return 4;
    case PrimitiveType::int64:
    case PrimitiveType::float64:
      return 8;
    case PrimitiveType::bool8:
      return 1;
  }
  return 0;
}

constexpr bool is_floating(PrimitiveType t) noexcept {
  return t == PrimitiveType::float32 || t == PrimitiveType::float64;
}

constexpr bool is_numeric(PrimitiveType t) noexcept { return t != PrimitiveType::bool8; }

/// Display and wire name: int32, int64, uint32, float32, float64, bool.
std::string_view name(PrimitiveType t) noexcept;

std::optional<PrimitiveType> parse_primitive(std::string_view name) noexcept;

/// One decoded element of a primitive buffer. The alternative is the dtype.
using Scalar = std::variant<bool, std::int32_t, std::int64_t, std::uint32_t, float, double>;

PrimitiveType dtype_of(const Scalar& s) noexcept;

double to_double(const Scalar& s) noexcept;

/// Exact conversion of `s` into `target`. Throws RangeError when the value is
/// not representable (out of range or non-integral for integer dtypes) and
/// TypeError when mixing bool with numbers.
Scalar convert(const Scalar& s, PrimitiveType target);

std::string to_string(const Scalar& s);

}  // namespace raggedcore

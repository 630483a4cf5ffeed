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

#include "raggedcore/dtype.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <utility>
#include <type_traits>

#include "raggedcore/errors.hpp"

namespace raggedcore {

std::string_view name(PrimitiveType t) noexcept {
  switch (t) {
    case PrimitiveType::int32:
      return "int32";
    case PrimitiveType::int64:
      return "int64";
    case PrimitiveType::uint32:
      return "uint32";
    case PrimitiveType::float32:
      return "float32";
    case PrimitiveType::float64:
      return "float64";
    case PrimitiveType::bool8:
      return "bool";
  }
  return "?";
}

std::optional<PrimitiveType> parse_primitive(std::string_view n) noexcept {
  for (auto t : {PrimitiveType::int32, PrimitiveType::int64, PrimitiveType::uint32,
                 PrimitiveType::float32, PrimitiveType::float64, PrimitiveType::bool8}) {
    if (name(t) == n) return t;
  }
  return std::nullopt;
}

PrimitiveType dtype_of(const Scalar& s) noexcept {
  switch (s.index()) {
    case 0:
      return PrimitiveType::bool8;
    case 1:
      return PrimitiveType::int32;
    case 2:
      return PrimitiveType::int64;
    case 3:
      return PrimitiveType::uint32;
    case 4:
      return PrimitiveType::float32;
    default:
      return PrimitiveType::float64;
  }
}

double to_double(const Scalar& s) noexcept {
  return std::visit([](auto v) { return static_cast<double>(v); }, s);
}

namespace {

template <class Int>
Int to_integer(const Scalar& s, PrimitiveType target) {
  auto fail = [&] {
    return RangeError("value " + to_string(s) + " is not representable as " +
                      std::string(name(target)));
  };
  return std::visit(
      [&](auto v) -> Int {
        using V = decltype(v);
        if constexpr (std::is_same_v<V, bool>) {
          throw TypeError("cannot store bool in " + std::string(name(target)));
        } else if constexpr (std::is_floating_point_v<V>) {
          if (!std::isfinite(v) || std::trunc(v) != v) throw fail();
          // Range test in long double so that 2^63 and friends are exact.
          auto wide = static_cast<long double>(v);
          if (wide < static_cast<long double>(std::numeric_limits<Int>::min()) ||
              wide > static_cast<long double>(std::numeric_limits<Int>::max())) {
            throw fail();
          }
          return static_cast<Int>(v);
        } else {
          if (!std::in_range<Int>(v)) throw fail();
          return static_cast<Int>(v);
        }
      },
      s);
}

template <class Float>
Float to_floating(const Scalar& s, PrimitiveType target) {
  return std::visit(
      [&](auto v) -> Float {
        if constexpr (std::is_same_v<decltype(v), bool>) {
          throw TypeError("cannot store bool in " + std::string(name(target)));
        } else {
          return static_cast<Float>(v);
        }
      },
      s);
}

}  // namespace

Scalar convert(const Scalar& s, PrimitiveType target) {
  switch (target) {
    case PrimitiveType::int32:
      return to_integer<std::int32_t>(s, target);
    case PrimitiveType::int64:
      return to_integer<std::int64_t>(s, target);
    case PrimitiveType::uint32:
      return to_integer<std::uint32_t>(s, target);
    case PrimitiveType::float32:
      return to_floating<float>(s, target);
    case PrimitiveType::float64:
      return to_floating<double>(s, target);
    case PrimitiveType::bool8:
      if (!std::holds_alternative<bool>(s)) {
        throw TypeError("cannot store " + std::string(name(dtype_of(s))) + " in bool");
      }
      return s;
  }
  return s;
}

std::string to_string(const Scalar& s) {
  std::string out;
  std::visit(
      [&](auto v) {
        if constexpr (std::is_same_v<decltype(v), bool>) {
          out = v ? "true" : "false";
        } else if constexpr (std::is_floating_point_v<decltype(v)>) {
          char buf[64];
          auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
          out.assign(buf, end);
        } else {
          out = std::to_string(v);
        }
      },
      s);
  return out;
}

}  // namespace raggedcore

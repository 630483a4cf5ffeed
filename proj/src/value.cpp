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

#include "raggedcore/value.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <type_traits>

#include "raggedcore/errors.hpp"

namespace raggedcore {

namespace {

template <class F>
void append_float(std::string& out, F v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string_view text(buf, static_cast<std::size_t>(end - buf));
  out += text;
  if (text.find_first_of(".e") == std::string_view::npos) out += ".0";
}

void append_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void append_scalar_json(std::string& out, const Scalar& s) {
  std::visit(
      [&](auto v) {
        using V = decltype(v);
        if constexpr (std::is_same_v<V, bool>) {
          out += v ? "true" : "false";
        } else if constexpr (std::is_floating_point_v<V>) {
          append_float(out, v);
        } else {
          char buf[32];
          auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
          out.append(buf, end);
        }
      },
      s);
}

const Value& Value::field(const std::string& name) const {
  std::vector<std::string> names;
  for (const auto& [k, v] : record()) {
    if (k == name) return v;
    names.push_back(k);
  }
  throw UnknownFieldError("no field '" + name + "'", name, std::move(names));
}

void Value::append_json(std::string& out) const {
  if (const auto* s = std::get_if<Scalar>(&data_)) {
    append_scalar_json(out, *s);
  } else if (const auto* l = std::get_if<List>(&data_)) {
    out += '[';
    for (std::size_t i = 0; i < l->size(); ++i) {
      if (i) out += ',';
      (*l)[i].append_json(out);
    }
    out += ']';
  } else {
    const auto& r = std::get<Record>(data_);
    out += '{';
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      append_string(out, r[i].first);
      out += ':';
      r[i].second.append_json(out);
    }
    out += '}';
  }
}

std::string Value::to_json() const {
  std::string out;
  append_json(out);
  return out;
}

}  // namespace raggedcore

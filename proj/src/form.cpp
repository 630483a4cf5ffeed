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

#include "raggedcore/form.hpp"

#include <set>

#include <json.hpp>

#include "raggedcore/errors.hpp"

namespace raggedcore {

using nlohmann::json;
using nlohmann::ordered_json;

Form Form::numpy(PrimitiveType dtype, std::string form_key) {
  Form f;
  f.kind_ = NodeKind::primitive;
  f.dtype_ = dtype;
  f.form_key_ = std::move(form_key);
  return f;
}

Form Form::list_offset(Form content, std::string form_key) {
  Form f;
  f.kind_ = NodeKind::list_offset;
  f.contents_.push_back(std::move(content));
  f.form_key_ = std::move(form_key);
  return f;
}

Form Form::record(std::vector<std::string> fields, std::vector<Form> contents,
                  std::string form_key) {
  if (fields.size() != contents.size()) {
    throw FormatError("record form has " + std::to_string(fields.size()) + " fields but " +
                      std::to_string(contents.size()) + " contents");
  }
  Form f;
  f.kind_ = NodeKind::record;
  f.fields_ = std::move(fields);
  f.contents_ = std::move(contents);
  f.form_key_ = std::move(form_key);
  return f;
}

namespace {

ordered_json to_object(const Form& f) {
  ordered_json out;
  switch (f.kind()) {
    case NodeKind::primitive:
      out["class"] = "NumpyArray";
      out["primitive"] = std::string(name(f.dtype()));
      break;
    case NodeKind::list_offset:
      out["class"] = "ListOffsetArray";
      out["offsets"] = "i64";
      out["content"] = to_object(f.content());
      break;
    case NodeKind::record: {
      out["class"] = "RecordArray";
      out["fields"] = f.fields();
      auto contents = ordered_json::array();
      for (const auto& c : f.contents()) contents.push_back(to_object(c));
      out["contents"] = std::move(contents);
      break;
    }
  }
  out["form_key"] = f.form_key();
  return out;
}

const json& member(const json& node, const char* key) {
  auto it = node.find(key);
  if (it == node.end()) throw FormatError(std::string("form node is missing \"") + key + "\"");
  return *it;
}

std::string string_member(const json& node, const char* key) {
  const json& v = member(node, key);
  if (!v.is_string()) throw FormatError(std::string("form member \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Form from_object(const json& node, std::set<std::string>& keys) {
  if (!node.is_object()) throw FormatError("form node must be a JSON object");
  std::string cls = string_member(node, "class");
  std::string key;
  if (auto it = node.find("form_key"); it != node.end() && !it->is_null()) {
    if (!it->is_string()) throw FormatError("form_key must be a string");
    key = it->get<std::string>();
    if (!key.empty() && !keys.insert(key).second) {
      throw FormatError("duplicate form_key '" + key + "'");
    }
  }
  if (cls == "NumpyArray") {
    std::string prim = string_member(node, "primitive");
    auto dtype = parse_primitive(prim);
    if (!dtype) throw FormatError("unsupported primitive '" + prim + "'");
    return Form::numpy(*dtype, key);
  }
  if (cls == "ListOffsetArray") {
    std::string offsets = string_member(node, "offsets");
    if (offsets != "i64") throw FormatError("unsupported offsets type '" + offsets + "'");
    return Form::list_offset(from_object(member(node, "content"), keys), key);
  }
  if (cls == "RecordArray") {
    const json& fields = member(node, "fields");
    const json& contents = member(node, "contents");
    if (!fields.is_array() || !contents.is_array()) {
      throw FormatError("RecordArray \"fields\" and \"contents\" must be arrays");
    }
    std::vector<std::string> names;
    for (const auto& f : fields) {
      if (!f.is_string()) throw FormatError("RecordArray field names must be strings");
      names.push_back(f.get<std::string>());
    }
    std::vector<Form> children;
    for (const auto& c : contents) children.push_back(from_object(c, keys));
    return Form::record(std::move(names), std::move(children), key);
  }
  throw UnsupportedClassError(cls);
}

void assign_keys(Form& f, int& next);

}  // namespace

Form Form::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed form JSON: ") + e.what(), e.byte);
  }
  std::set<std::string> keys;
  return from_object(doc, keys);
}

std::string Form::to_json() const { return to_object(*this).dump(2); }

std::string Form::type_string() const {
  switch (kind_) {
    case NodeKind::primitive:
      return std::string(name(dtype_));
    case NodeKind::list_offset:
      return "var * " + content().type_string();
    case NodeKind::record: {
      std::string out = "{";
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ", ";
        out += fields_[i] + ": " + contents_[i].type_string();
      }
      return out + "}";
    }
  }
  return {};
}

std::size_t Form::node_count() const noexcept {
  std::size_t n = 1;
  for (const auto& c : contents_) n += c.node_count();
  return n;
}

Form Form::with_preorder_keys() const {
  Form out = *this;
  int next = 0;
  assign_keys(out, next);
  return out;
}

namespace {
void assign_keys(Form& f, int& next) {
  f = [&] {
    // Rebuild through the factories to keep members private.
    switch (f.kind()) {
      case NodeKind::primitive:
        return Form::numpy(f.dtype(), "node" + std::to_string(next++));
      case NodeKind::list_offset: {
        std::string key = "node" + std::to_string(next++);
        Form content = f.content();
        assign_keys(content, next);
        return Form::list_offset(std::move(content), std::move(key));
      }
      case NodeKind::record: {
        std::string key = "node" + std::to_string(next++);
        std::vector<Form> contents = f.contents();
        for (auto& c : contents) assign_keys(c, next);
        return Form::record(f.fields(), std::move(contents), std::move(key));
      }
    }
    return f;
  }();
}
}  // namespace

namespace {
Form structure_of(const Layout& l) {
  switch (l.kind()) {
    case NodeKind::primitive:
      return Form::numpy(l.dtype());
    case NodeKind::list_offset:
      return Form::list_offset(structure_of(l.content()));
    case NodeKind::record: {
      std::vector<Form> contents;
      for (const auto& c : l.contents()) contents.push_back(structure_of(c));
      return Form::record(l.fields(), std::move(contents));
    }
  }
  return Form::numpy(PrimitiveType::float64);
}
}  // namespace

Form form_of(const Layout& layout) { return structure_of(layout).with_preorder_keys(); }

std::string data_buffer_name(const std::string& form_key) { return form_key + "-data"; }
std::string offsets_buffer_name(const std::string& form_key) { return form_key + "-offsets"; }

}  // namespace raggedcore

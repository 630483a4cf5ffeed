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

#include "raggedcore/layout.hpp"

#include <set>

#include "raggedcore/errors.hpp"

namespace raggedcore {

struct Layout::Node {
  NodeKind kind;
  std::string form_key;
  PrimitiveType dtype = PrimitiveType::float64;
  Buffer buffer;  // data or offsets
  std::vector<std::string> fields;
  std::vector<Layout> contents;
  std::int64_t record_length = 0;
};

Layout Layout::primitive(PrimitiveType dtype, Buffer data, std::string form_key) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::primitive;
  n->dtype = dtype;
  n->buffer = std::move(data);
  n->form_key = std::move(form_key);
  return Layout(std::move(n));
}

Layout Layout::list_offset(Buffer offsets, Layout content, std::string form_key) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::list_offset;
  n->buffer = std::move(offsets);
  n->contents.push_back(std::move(content));
  n->form_key = std::move(form_key);
  return Layout(std::move(n));
}

Layout Layout::record(std::vector<std::string> fields, std::vector<Layout> contents,
                      std::string form_key) {
  std::int64_t length = contents.empty() ? 0 : contents.front().length();
  return record(std::move(fields), std::move(contents), length, std::move(form_key));
}

Layout Layout::record(std::vector<std::string> fields, std::vector<Layout> contents,
                      std::int64_t length, std::string form_key) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::record;
  n->fields = std::move(fields);
  n->contents = std::move(contents);
  n->record_length = length;
  n->form_key = std::move(form_key);
  return Layout(std::move(n));
}

NodeKind Layout::kind() const noexcept { return node_->kind; }
const std::string& Layout::form_key() const noexcept { return node_->form_key; }

std::int64_t Layout::length() const noexcept {
  switch (node_->kind) {
    case NodeKind::primitive:
      return static_cast<std::int64_t>(node_->buffer.size() / width(node_->dtype));
    case NodeKind::list_offset:
      return std::max<std::int64_t>(offset_count() - 1, 0);
    case NodeKind::record:
      return node_->record_length;
  }
  return 0;
}

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw TypeError(std::string("layout node is not a ") + what);
}
}  // namespace

PrimitiveType Layout::dtype() const {
  require(node_->kind == NodeKind::primitive, "primitive");
  return node_->dtype;
}

const Buffer& Layout::data() const {
  require(node_->kind == NodeKind::primitive, "primitive");
  return node_->buffer;
}

const Buffer& Layout::offsets() const {
  require(node_->kind == NodeKind::list_offset, "list");
  return node_->buffer;
}

std::int64_t Layout::offset(std::int64_t i) const noexcept {
  return node_->buffer.get<std::int64_t>(static_cast<std::size_t>(i));
}

std::int64_t Layout::offset_count() const noexcept {
  return static_cast<std::int64_t>(node_->buffer.size() / sizeof(std::int64_t));
}

const Layout& Layout::content() const {
  require(node_->kind == NodeKind::list_offset, "list");
  return node_->contents.front();
}

const std::vector<std::string>& Layout::fields() const {
  require(node_->kind == NodeKind::record, "record");
  return node_->fields;
}

const std::vector<Layout>& Layout::contents() const {
  require(node_->kind == NodeKind::record, "record");
  return node_->contents;
}

std::optional<std::size_t> Layout::field_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < node_->fields.size(); ++i) {
    if (node_->fields[i] == name) return i;
  }
  return std::nullopt;
}

const Layout& Layout::field(std::string_view name) const {
  require(node_->kind == NodeKind::record, "record");
  if (auto i = field_index(name)) return node_->contents[*i];
  std::string list;
  for (const auto& f : node_->fields) list += (list.empty() ? "" : ", ") + f;
  throw UnknownFieldError("no field '" + std::string(name) + "' (available: {" + list + "})",
                          std::string(name), node_->fields);
}

Layout Layout::with_form_key(std::string key) const {
  auto n = std::make_shared<Node>(*node_);
  n->form_key = std::move(key);
  return Layout(std::move(n));
}

std::size_t Layout::node_count() const noexcept {
  std::size_t n = 1;
  for (const auto& c : node_->contents) n += c.node_count();
  return n;
}

// ---------------------------------------------------------------------------

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations_) {
    out += (v.form_key.empty() ? "<unkeyed>" : v.form_key) + ": " + v.rule + "\n";
  }
  return out;
}

namespace {

void validate_node(const Layout& node, ValidationReport& report, std::set<std::string>& keys) {
  const std::string& key = node.form_key();
  if (!key.empty() && !keys.insert(key).second) {
    report.add(key, "duplicate form_key");
  }
  switch (node.kind()) {
    case NodeKind::primitive: {
      std::size_t w = width(node.dtype());
      if (node.data().size() % w != 0) {
        report.add(key, "data byte length " + std::to_string(node.data().size()) +
                            " is not a multiple of width " + std::to_string(w));
      }
      return;
    }
    case NodeKind::list_offset: {
      const Buffer& offsets = node.offsets();
      if (offsets.size() % sizeof(std::int64_t) != 0) {
        report.add(key, "offsets byte length " + std::to_string(offsets.size()) +
                            " is not a multiple of 8");
      }
      std::int64_t count = node.offset_count();
      if (count < 1) {
        report.add(key, "offsets must have at least one entry");
      } else {
        if (node.offset(0) != 0) {
          report.add(key, "offsets[0] is " + std::to_string(node.offset(0)) + ", expected 0");
        }
        for (std::int64_t i = 1; i < count; ++i) {
          if (node.offset(i) < node.offset(i - 1)) {
            report.add(key, "offsets non-monotonic at index " + std::to_string(i));
            break;
          }
        }
        std::int64_t last = node.offset(count - 1);
        std::int64_t content_length = node.content().length();
        if (last > content_length) {
          report.add(key, "offsets[last] = " + std::to_string(last) +
                              " exceeds content length " + std::to_string(content_length));
        }
      }
      validate_node(node.content(), report, keys);
      return;
    }
    case NodeKind::record: {
      const auto& fields = node.fields();
      const auto& contents = node.contents();
      if (fields.size() != contents.size()) {
        report.add(key, std::to_string(fields.size()) + " field names for " +
                            std::to_string(contents.size()) + " contents");
      }
      std::set<std::string_view> seen;
      for (const auto& f : fields) {
        if (f.empty()) report.add(key, "empty field name");
        if (!seen.insert(f).second) report.add(key, "duplicate field name '" + f + "'");
      }
      for (std::size_t i = 0; i < contents.size(); ++i) {
        if (contents[i].length() != node.length()) {
          std::string fname = i < fields.size() ? fields[i] : std::to_string(i);
          report.add(key, "field '" + fname + "' has length " +
                              std::to_string(contents[i].length()) + ", record length is " +
                              std::to_string(node.length()));
        }
        validate_node(contents[i], report, keys);
      }
      return;
    }
  }
}

}  // namespace

ValidationReport validate(const Layout& layout) {
  ValidationReport report;
  std::set<std::string> keys;
  validate_node(layout, report, keys);
  return report;
}

std::string type_string(const Layout& layout) {
  switch (layout.kind()) {
    case NodeKind::primitive:
      return std::string(name(layout.dtype()));
    case NodeKind::list_offset:
      return "var * " + type_string(layout.content());
    case NodeKind::record: {
      std::string out = "{";
      for (std::size_t i = 0; i < layout.contents().size(); ++i) {
        if (i) out += ", ";
        out += layout.fields()[i] + ": " + type_string(layout.contents()[i]);
      }
      return out + "}";
    }
  }
  return {};
}

std::string type_string(const Layout& layout, std::int64_t outer_length) {
  return std::to_string(outer_length) + " * " + type_string(layout);
}

Layout clip(const Layout& layout, std::int64_t n) {
  if (n >= layout.length()) return layout;
  switch (layout.kind()) {
    case NodeKind::primitive: {
      std::size_t w = width(layout.dtype());
      return Layout::primitive(layout.dtype(), layout.data().slice(0, n * w), layout.form_key());
    }
    case NodeKind::list_offset: {
      Buffer offsets = layout.offsets().slice(0, (n + 1) * sizeof(std::int64_t));
      return Layout::list_offset(offsets, clip(layout.content(), layout.offset(n)),
                                 layout.form_key());
    }
    case NodeKind::record: {
      std::vector<Layout> contents;
      for (const auto& c : layout.contents()) contents.push_back(clip(c, n));
      return Layout::record(layout.fields(), std::move(contents), n, layout.form_key());
    }
  }
  return layout;
}

}  // namespace raggedcore

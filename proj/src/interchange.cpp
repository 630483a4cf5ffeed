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

#include "raggedcore/interchange.hpp"

#include <algorithm>

#include "raggedcore/errors.hpp"

namespace raggedcore {

namespace {

Form share_node(const Layout& node, int& next, BufferMap& buffers) {
  std::string key = "node" + std::to_string(next++);
  switch (node.kind()) {
    case NodeKind::primitive:
      buffers.emplace(data_buffer_name(key), node.data());
      return Form::numpy(node.dtype(), key);
    case NodeKind::list_offset: {
      buffers.emplace(offsets_buffer_name(key), node.offsets());
      Form content = share_node(node.content(), next, buffers);
      return Form::list_offset(std::move(content), key);
    }
    case NodeKind::record: {
      std::vector<Form> contents;
      contents.reserve(node.contents().size());
      for (const auto& c : node.contents()) contents.push_back(share_node(c, next, buffers));
      return Form::record(node.fields(), std::move(contents), key);
    }
  }
  throw TypeError("unknown layout node");
}

const Buffer& lookup(const BufferMap& buffers, const std::string& name) {
  auto it = buffers.find(name);
  if (it == buffers.end()) throw MissingBufferError(name);
  return it->second;
}

// Builds the node for `form` holding at least `expected` elements; longer
// nodes are clipped so that every node has exactly the length its parent
// needs. Shorter ones are left for validation to report.
Layout assemble(const Form& form, std::int64_t expected, const BufferMap& buffers) {
  switch (form.kind()) {
    case NodeKind::primitive: {
      std::string name = data_buffer_name(form.form_key());
      const Buffer& data = lookup(buffers, name);
      std::size_t w = width(form.dtype());
      if (data.size() % w != 0) {
        throw FormatError("buffer '" + name + "' has " + std::to_string(data.size()) +
                          " bytes, not a multiple of " + std::to_string(w) + " (" +
                          std::string(raggedcore::name(form.dtype())) + ")");
      }
      return clip(Layout::primitive(form.dtype(), data, form.form_key()), expected);
    }
    case NodeKind::list_offset: {
      std::string name = offsets_buffer_name(form.form_key());
      const Buffer& offsets = lookup(buffers, name);
      if (offsets.size() % sizeof(std::int64_t) != 0) {
        throw FormatError("buffer '" + name + "' has " + std::to_string(offsets.size()) +
                          " bytes, not a multiple of 8 (int64 offsets)");
      }
      auto count = static_cast<std::int64_t>(offsets.size() / sizeof(std::int64_t));
      std::int64_t used = std::min(count, expected + 1);
      Buffer kept = offsets.slice(0, static_cast<std::size_t>(used) * sizeof(std::int64_t));
      std::int64_t content_needed = used > 0 ? std::max<std::int64_t>(kept.get<std::int64_t>(used - 1), 0) : 0;
      Layout content = assemble(form.content(), content_needed, buffers);
      return Layout::list_offset(kept, std::move(content), form.form_key());
    }
    case NodeKind::record: {
      std::vector<Layout> contents;
      for (const auto& c : form.contents()) {
        contents.push_back(assemble(c, expected, buffers));
      }
      return Layout::record(form.fields(), std::move(contents), expected, form.form_key());
    }
  }
  throw TypeError("unknown form node");
}

}  // namespace

ArrayPackage to_buffers(const Layout& layout, std::int64_t length) {
  ArrayPackage out;
  int next = 0;
  out.form = share_node(layout, next, out.buffers);
  out.length = length;
  return out;
}

ArrayPackage to_buffers(const Array& array) { return to_buffers(array.layout(), array.length()); }

Layout assemble_layout(const Form& form, std::int64_t length, const BufferMap& buffers) {
  if (length < 0) throw ValueError("negative package length " + std::to_string(length));
  return assemble(form, length, buffers);
}

Array from_buffers(const Form& form, std::int64_t length, const BufferMap& buffers) {
  Layout layout = assemble_layout(form, length, buffers);
  if (layout.length() != length && validate(layout).ok()) {
    throw ValidationError("invalid layout:\n" + form.form_key() + ": node has length " +
                          std::to_string(layout.length()) + ", package length is " +
                          std::to_string(length) + "\n");
  }
  return Array(std::move(layout));
}

Array from_buffers(const ArrayPackage& package) {
  return from_buffers(package.form, package.length, package.buffers);
}

Form parse_form(std::string_view text) { return Form::parse(text); }

}  // namespace raggedcore

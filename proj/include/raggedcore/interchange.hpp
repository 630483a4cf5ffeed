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
#include <filesystem>
#include <map>
#include <string>

#include "raggedcore/array.hpp"
#include "raggedcore/buffer.hpp"
#include "raggedcore/form.hpp"

namespace raggedcore {

using BufferMap = std::map<std::string, Buffer>;

/// The interchange unit: structure, outer length, and named little-endian
/// buffers.
struct ArrayPackage {
  Form form;
  std::int64_t length = 0;
  BufferMap buffers;
};

/// Shares the array's buffers under pre-order form keys. No data is copied.
ArrayPackage to_buffers(const Array& array);
/// Same for an unvalidated layout of a known length (used by builders).
ArrayPackage to_buffers(const Layout& layout, std::int64_t length);

/// Reassembles and validates an array. Throws MissingBufferError, FormatError
/// (byte length not a multiple of the element width) or ValidationError.
Array from_buffers(const Form& form, std::int64_t length, const BufferMap& buffers);
Array from_buffers(const ArrayPackage& package);

/// The layout from_buffers would validate, without validating it. Throws
/// MissingBufferError or FormatError.
Layout assemble_layout(const Form& form, std::int64_t length, const BufferMap& buffers);

Form parse_form(std::string_view text);

/// Writes form.json, manifest.json and one <buffer-name>.raw per buffer.
void write_package(const ArrayPackage& package, const std::filesystem::path& directory);

/// Throws FormatError on a missing or corrupt manifest/form, a listed buffer
/// file that is absent, or a buffer size that is not a multiple of its width.
ArrayPackage read_package(const std::filesystem::path& directory);

}  // namespace raggedcore

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

#include <fstream>
#include <map>
#include <span>
#include <sstream>

#include <json.hpp>

#include "raggedcore/errors.hpp"
#include "raggedcore/interchange.hpp"

namespace raggedcore {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void write_file(const fs::path& path, std::span<const std::byte> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("failed writing '" + path.string() + "'");
}

void write_text(const fs::path& path, const std::string& text) {
  write_file(path, std::as_bytes(std::span(text.data(), text.size())));
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Buffer read_buffer(const fs::path& path) {
  std::error_code ec;
  auto size = fs::file_size(path, ec);
  if (ec) throw FormatError("buffer file '" + path.string() + "' is missing");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path.string() + "'");
  auto storage = allocate_storage(size);
  in.read(reinterpret_cast<char*>(storage.get()), static_cast<std::streamsize>(size));
  if (static_cast<std::uintmax_t>(in.gcount()) != size) {
    throw FormatError("short read from '" + path.string() + "'");
  }
  return Buffer(std::move(storage), size);
}

// buffer name -> element width, from the form
void collect_widths(const Form& form, std::map<std::string, std::size_t>& out) {
  switch (form.kind()) {
    case NodeKind::primitive:
      out[data_buffer_name(form.form_key())] = width(form.dtype());
      break;
    case NodeKind::list_offset:
      out[offsets_buffer_name(form.form_key())] = sizeof(std::int64_t);
      collect_widths(form.content(), out);
      break;
    case NodeKind::record:
      for (const auto& c : form.contents()) collect_widths(c, out);
      break;
  }
}

bool safe_buffer_name(const std::string& name) {
  return !name.empty() && name.find('/') == std::string::npos &&
         name.find('\\') == std::string::npos && name != "." && name != "..";
}

}  // namespace

void write_package(const ArrayPackage& package, const fs::path& directory) {
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw FormatError("cannot create '" + directory.string() + "': " + ec.message());

  ordered_json manifest;
  manifest["length"] = package.length;
  manifest["buffers"] = ordered_json::array();
  for (const auto& [name, buffer] : package.buffers) {
    if (!safe_buffer_name(name)) throw FormatError("invalid buffer name '" + name + "'");
    manifest["buffers"].push_back(name);
    write_file(directory / (name + ".raw"), buffer.bytes());
  }
  write_text(directory / "form.json", package.form.to_json() + "\n");
  write_text(directory / "manifest.json", manifest.dump(2) + "\n");
}

ArrayPackage read_package(const fs::path& directory) {
  if (!fs::is_directory(directory)) {
    throw FormatError("'" + directory.string() + "' is not a package directory");
  }
  json manifest;
  try {
    manifest = json::parse(read_text(directory / "manifest.json"));
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("corrupt manifest.json: ") + e.what());
  }
  if (!manifest.is_object() || !manifest.contains("length") || !manifest.contains("buffers") ||
      !manifest["length"].is_number_integer() || !manifest["buffers"].is_array()) {
    throw FormatError("manifest.json must hold an integer \"length\" and a \"buffers\" array");
  }

  ArrayPackage out;
  out.length = manifest["length"].get<std::int64_t>();
  if (out.length < 0) throw FormatError("manifest length is negative");
  try {
    out.form = Form::parse(read_text(directory / "form.json"));
  } catch (const ParseError& e) {
    throw FormatError(std::string("corrupt form.json: ") + e.what());
  }

  std::map<std::string, std::size_t> widths;
  collect_widths(out.form, widths);
  for (const auto& entry : manifest["buffers"]) {
    if (!entry.is_string()) throw FormatError("manifest buffer names must be strings");
    auto name = entry.get<std::string>();
    if (!safe_buffer_name(name)) throw FormatError("invalid buffer name '" + name + "'");
    Buffer buffer = read_buffer(directory / (name + ".raw"));
    if (auto w = widths.find(name); w != widths.end() && buffer.size() % w->second != 0) {
      throw FormatError("buffer '" + name + "' has " + std::to_string(buffer.size()) +
                        " bytes, not a multiple of element width " + std::to_string(w->second));
    }
    out.buffers.emplace(std::move(name), std::move(buffer));
  }
  return out;
}

}  // namespace raggedcore

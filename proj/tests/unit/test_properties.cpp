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

#include <cstring>
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "raggedcore/raggedcore.hpp"

namespace rc = raggedcore;
namespace fs = std::filesystem;
using rc::testing::random_case;
using rc::testing::same_json;

namespace {

constexpr int kCases = 150;

bool offsets_ok(const std::vector<std::int64_t>& off, std::int64_t content_length) {
  if (off.empty() || off.front() != 0) return false;
  for (std::size_t i = 1; i < off.size(); ++i) {
    if (off[i] < off[i - 1]) return false;
  }
  return off.back() <= content_length;
}

}  // namespace

TEST(Properties, BuilderMatchesShadow) {
  for (int seed = 0; seed < kCases; ++seed) {
    auto c = random_case(seed, 3, 200);
    ASSERT_TRUE(same_json(c.array.to_json(), c.expected)) << "seed " << seed << " " << c.form.type_string();
    ASSERT_EQ(c.array.length(), static_cast<std::int64_t>(c.expected.size()));
  }
}

TEST(Properties, BuffersRoundTripIsZeroCopy) {
  for (int seed = 0; seed < kCases; ++seed) {
    auto c = random_case(seed, 3, 200);
    rc::ArrayPackage pkg = rc::to_buffers(c.array);
    rc::Array back = rc::from_buffers(pkg);
    ASSERT_EQ(back.to_json(), c.array.to_json()) << "seed " << seed;
    rc::ArrayPackage again = rc::to_buffers(back);
    ASSERT_EQ(again.form, pkg.form);
    for (const auto& [name, buffer] : pkg.buffers) {
      ASSERT_EQ(again.buffers.at(name).storage_id(), buffer.storage_id()) << name;
    }
    ASSERT_EQ(rc::parse_form(pkg.form.to_json()), pkg.form);
  }
}

TEST(Properties, PackageFilesRoundTrip) {
  fs::path dir = fs::temp_directory_path() / "raggedcore-properties-files";
  for (int seed = 0; seed < 40; ++seed) {
    fs::remove_all(dir);
    auto c = random_case(seed, 3, 100);
    rc::write_package(rc::to_buffers(c.array), dir);
    rc::Array back = rc::from_buffers(rc::read_package(dir));
    ASSERT_TRUE(same_json(back.to_json(), c.expected)) << "seed " << seed;
  }
  fs::remove_all(dir);
}

TEST(Properties, GetItemMatchesShadow) {
  for (int seed = 0; seed < 50; ++seed) {
    auto c = random_case(seed, 3, 50);
    rc::ArrayView v = rc::view_of(c.array);
    for (std::int64_t i = 0; i < c.array.length(); ++i) {
      ASSERT_TRUE(same_json(c.array.get_item(i).to_json(), c.expected[i]));
      ASSERT_EQ(v[i].materialize(), c.array.get_item(i));
    }
  }
}

TEST(Properties, UnflattenInvertsFlatten) {
  for (int seed = 0; seed < kCases; ++seed) {
    auto c = random_case(seed, 3, 200);
    if (c.array.layout().kind() != rc::NodeKind::list_offset) continue;
    rc::Flattened flat = rc::flatten(c.array);
    rc::Array again = rc::unflatten(flat.content, flat.counts);
    ASSERT_EQ(again.to_json(), c.array.to_json()) << "seed " << seed;
  }
}

TEST(Properties, TabularRoundTrip) {
  for (int seed = 0; seed < kCases; ++seed) {
    auto c = random_case(seed, 3, 200);
    if (c.array.layout().kind() != rc::NodeKind::record) continue;
    rc::ColumnSource source = rc::to_tabular_source(c.array);
    std::vector<std::string> columns(source.column_names());
    ASSERT_EQ(rc::from_tabular(source, columns).to_json(), c.array.to_json()) << "seed " << seed;
  }
}

TEST(Properties, OffsetsByteCorruptionDetected) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int seed = 0; checked < 300 && seed < 5000; ++seed) {
    auto c = random_case(seed, 3, 60);
    if (c.array.layout().kind() != rc::NodeKind::list_offset) continue;
    rc::ArrayPackage pkg = rc::to_buffers(c.array);
    const std::string name = rc::offsets_buffer_name(pkg.form.form_key());
    const rc::Buffer& original = pkg.buffers.at(name);
    std::vector<std::byte> bytes(original.bytes().begin(), original.bytes().end());
    std::size_t at = std::uniform_int_distribution<std::size_t>(0, bytes.size() - 1)(rng);
    std::byte replacement{static_cast<unsigned char>(std::uniform_int_distribution<int>(0, 255)(rng))};
    if (replacement == bytes[at]) continue;
    bytes[at] = replacement;
    pkg.buffers[name] = rc::Buffer::copy_of(bytes);

    std::vector<std::int64_t> off(bytes.size() / 8);
    std::memcpy(off.data(), bytes.data(), bytes.size());
    bool expect_ok = offsets_ok(off, c.array.layout().content().length());

    rc::Layout layout = rc::assemble_layout(pkg.form, pkg.length, pkg.buffers);
    ASSERT_EQ(rc::validate(layout).ok(), expect_ok) << "seed " << seed << " byte " << at;
    if (!expect_ok) {
      EXPECT_THROW(rc::from_buffers(pkg), rc::ValidationError);
    }
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

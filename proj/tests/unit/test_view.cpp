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

#include <gtest/gtest.h>

#include "alloc_counter.hpp"
#include "fixtures.hpp"
#include "raggedcore/raggedcore.hpp"

namespace rc = raggedcore;

TEST(View, SmallHandle) {
  EXPECT_LE(sizeof(rc::ArrayView), 64u);
  EXPECT_LE(sizeof(rc::RecordView), 64u);
}

TEST(View, TripleLoopMatchesValues) {
  rc::Array a = rc::testing::nested_records_array();
  double total = 0.0;
  for (rc::Element row : rc::view_of(a)) {
    for (rc::Element rec : row.list()) {
      for (rc::Element y : rec["y"].list()) total += y.number();
    }
  }
  EXPECT_NEAR(total, 10.1, 1e-9);
}

TEST(View, IndexingAndMaterialize) {
  rc::Array a = rc::testing::nested_records_array();
  rc::ArrayView v = rc::view_of(a);
  EXPECT_EQ(v.size(), 3);
  EXPECT_TRUE(v[1].list().empty());
  EXPECT_EQ(v[0][1]["x"].scalar(), rc::Scalar{std::int64_t{2}});
  EXPECT_DOUBLE_EQ(v[2][std::int64_t{0}]["y"][2].number(), 3.3);
  for (std::int64_t i = 0; i < a.length(); ++i) EXPECT_EQ(v[i].materialize(), a.get_item(i));
  EXPECT_EQ(v[0][0].record().fields(), (std::vector<std::string>{"x", "y"}));
}

TEST(View, ErrorPaths) {
  rc::Array a = rc::testing::nested_records_array();
  rc::ArrayView v = rc::view_of(a);
  EXPECT_THROW(v[3], rc::RangeError);
  EXPECT_THROW(v[-1], rc::RangeError);
  EXPECT_THROW(v[0].record(), rc::TypeError);
  EXPECT_THROW(v[0][0].list(), rc::TypeError);
  EXPECT_THROW(v[0][0].scalar(), rc::TypeError);
  EXPECT_THROW(v[0][0]["z"], rc::UnknownFieldError);
  EXPECT_THROW(v[0][0].record().field(5), rc::RangeError);
  EXPECT_THROW(v[0][0]["y"].number(), rc::TypeError);
}

TEST(View, ViewAtAndFieldDoNotAllocate) {
  rc::Array a = rc::testing::nested_records_array();
  double total = 0.0;
  std::size_t allocations = 0;
  {
    rc::testing::AllocationScope scope;
    rc::ArrayView v = rc::view_of(a);
    rc::Element e = v[2];
    rc::Element rec = e.list()[0];
    rc::Element y = rec.record().field("y");
    total = y.list()[1].number() + rec["x"].number();
    allocations = scope.count();
  }
  EXPECT_EQ(allocations, 0u);
  EXPECT_DOUBLE_EQ(total, 3.3);
}

TEST(View, BoolAndUnsignedLeaves) {
  rc::PrimitiveBuilder flags(rc::PrimitiveType::bool8);
  flags.append(true);
  flags.append(false);
  rc::Array a = flags.to_array();
  rc::ArrayView v = rc::view_of(a);
  EXPECT_EQ(v[0].scalar(), rc::Scalar{true});
  EXPECT_EQ(v[1].scalar(), rc::Scalar{false});
}

TEST(View, ProjectedFieldSharesBuffers) {
  rc::Array a = rc::testing::nested_records_array();
  rc::Array y = a.get_field("y");
  rc::ArrayView v = rc::view_of(y);
  EXPECT_EQ(v.size(), 3);
  EXPECT_EQ(v.buffers().size(), y.buffer_table().size());
  const std::byte* leaf = a.layout().content().field("y").content().data().data();
  bool found = false;
  for (std::size_t i = 0; i < v.buffers().size(); ++i) found = found || v.buffers()[i] == leaf;
  EXPECT_TRUE(found);
  EXPECT_DOUBLE_EQ(v[0][1][0].number(), 2.2);
}

TEST(View, OutOfRangeOnShortView) {
  rc::Array a = rc::testing::nested_records_array();
  rc::ArrayView row = rc::view_of(a)[0].list();
  EXPECT_EQ(row.size(), 2);
  EXPECT_THROW(row[5], rc::RangeError);
}

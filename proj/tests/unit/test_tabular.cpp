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

#include "fixtures.hpp"
#include "raggedcore/raggedcore.hpp"
#include "raggedcore/synth.hpp"

namespace rc = raggedcore;

TEST(Tabular, ColumnsOfRecordArray) {
  auto builder = rc::testing::one_two_builder();
  rc::testing::replay_one_two(*builder);
  rc::ColumnSource source = rc::to_tabular_source(builder->to_array());
  EXPECT_EQ(source.entries(), 2);
  EXPECT_EQ(source.column_names(), (std::vector<std::string>{"one", "two"}));
  EXPECT_EQ(source.column_type("two"), "var * int32");

  rc::ColumnReader two = source.reader("two");
  EXPECT_THROW(two.read(), rc::StateError);
  two.set_entry(1);
  EXPECT_EQ(two.read().list().size(), 2);
  EXPECT_THROW(two.set_entry(2), rc::RangeError);
  EXPECT_THROW(source.reader("three"), rc::UnknownFieldError);
}

TEST(Tabular, NonRecordRejected) {
  EXPECT_THROW(rc::to_tabular_source(rc::testing::nested_records_array()), rc::TypeError);
}

TEST(Tabular, RoundTripSubsetOfColumns) {
  auto events = rc::synth::events_array(rc::synth::muon_events(50, 3));
  rc::ColumnSource source = rc::to_tabular_source(events);
  std::vector<std::string> all(source.column_names());
  EXPECT_EQ(rc::from_tabular(source, all).to_json(), events.to_json());

  std::vector<std::string> some{"Muon_pt", "nMuon"};
  rc::Array subset = rc::from_tabular(source, some);
  EXPECT_EQ(subset.layout().fields(), some);
  EXPECT_EQ(subset.get_field("Muon_pt").to_json(), events.get_field("Muon_pt").to_json());

  rc::Array none = rc::from_tabular(source, {});
  EXPECT_EQ(none.length(), 50);

  std::vector<std::string> bad{"nope"};
  EXPECT_THROW(rc::from_tabular(source, bad), rc::UnknownFieldError);
}

TEST(Tabular, TwoMuonEntry) {
  std::vector<rc::synth::MuonEvent> events(1);
  events[0] = {{1, -1}, {40, 30}, {0.5, -0.5}, {0.1f, 2.1f}};
  rc::ColumnSource source = rc::to_tabular_source(rc::synth::events_array(events));
  rc::ColumnReader pt = source.reader("Muon_pt");
  EXPECT_THROW(pt.set_entry(-1), rc::RangeError);
  pt.set_entry(0);
  EXPECT_EQ(pt.read().list().size(), 2);
  EXPECT_EQ(source.column_type("nMuon"), "uint32");
}

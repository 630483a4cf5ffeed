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

#include "fixtures.hpp"

#include <algorithm>

namespace raggedcore::testing {

using nlohmann::json;

Array nested_records_array() {
  enum RecordField_ : std::size_t { x, y };
  auto record = std::make_unique<RecordBuilder>(
      FieldMap{{x, "x"}, {y, "y"}},
      RecordField{x, std::make_unique<PrimitiveBuilder>(PrimitiveType::int64)},
      RecordField{y, std::make_unique<ListOffsetBuilder>(
                         std::make_unique<PrimitiveBuilder>(PrimitiveType::float64))});
  ListOffsetBuilder outer(std::move(record));

  auto add = [&](std::int64_t xv, std::initializer_list<double> ys) {
    auto& rec = static_cast<RecordBuilder&>(outer.content());
    rec.field<PrimitiveBuilder>(x).append(xv);
    auto& ylist = rec.field<ListOffsetBuilder>(y);
    auto& yvals = ylist.begin_list<PrimitiveBuilder>();
    for (double v : ys) yvals.append(v);
    ylist.end_list();
  };

  outer.begin_list();
  add(1, {1.1});
  add(2, {2.2, 0.2});
  outer.end_list();
  outer.begin_list();
  outer.end_list();
  outer.begin_list();
  add(3, {3.0, 0.3, 3.3});
  outer.end_list();
  return outer.to_array();
}

std::unique_ptr<RecordBuilder> one_two_builder() {
  return std::make_unique<RecordBuilder>(
      FieldMap{{Field::one, "one"}, {Field::two, "two"}},
      RecordField{Field::one, std::make_unique<PrimitiveBuilder>(PrimitiveType::float64)},
      RecordField{Field::two, std::make_unique<ListOffsetBuilder>(
                                  std::make_unique<PrimitiveBuilder>(PrimitiveType::int32))});
}

void replay_one_two(RecordBuilder& builder) {
  auto& one_builder = builder.field<PrimitiveBuilder>(Field::one);
  auto& two_builder = builder.field<ListOffsetBuilder>(Field::two);

  one_builder.append(1.1);
  auto& two_subbuilder = two_builder.begin_list<PrimitiveBuilder>();
  two_subbuilder.append(1);
  two_builder.end_list();

  one_builder.append(2.2);
  two_builder.begin_list();
  two_subbuilder.append(1);
  two_subbuilder.append(2);
  two_builder.end_list();
}

namespace {

PrimitiveType random_dtype(std::mt19937_64& rng) {
  static constexpr PrimitiveType kAll[] = {PrimitiveType::int32,   PrimitiveType::int64,
                                           PrimitiveType::uint32,  PrimitiveType::float32,
                                           PrimitiveType::float64, PrimitiveType::bool8};
  return kAll[std::uniform_int_distribution<int>(0, 5)(rng)];
}

}  // namespace

Form random_form(std::mt19937_64& rng, int depth) {
  int choice = depth == 0 ? 0 : std::uniform_int_distribution<int>(0, 9)(rng);
  if (choice < 2) return Form::numpy(random_dtype(rng));
  if (choice < 6) return Form::list_offset(random_form(rng, depth - 1));
  static const char* kNames[] = {"x", "y", "pt", "eta", "Muon_charge", "nMuon", "a b"};
  int n = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<std::string> names;
  std::vector<Form> contents;
  while (static_cast<int>(names.size()) < n) {
    std::string candidate = kNames[std::uniform_int_distribution<int>(0, 6)(rng)];
    if (std::find(names.begin(), names.end(), candidate) != names.end()) continue;
    names.push_back(candidate);
    contents.push_back(random_form(rng, depth - 1));
  }
  return Form::record(std::move(names), std::move(contents));
}

json drive(Builder& builder, const Form& form, std::mt19937_64& rng) {
  switch (form.kind()) {
    case NodeKind::primitive: {
      auto& prim = dynamic_cast<PrimitiveBuilder&>(builder);
      switch (form.dtype()) {
        case PrimitiveType::int32: {
          auto v = std::uniform_int_distribution<std::int32_t>()(rng);
          prim.append(v);
          return v;
        }
        case PrimitiveType::int64: {
          auto v = std::uniform_int_distribution<std::int64_t>()(rng);
          prim.append(v);
          return v;
        }
        case PrimitiveType::uint32: {
          auto v = std::uniform_int_distribution<std::uint32_t>()(rng);
          prim.append(v);
          return v;
        }
        case PrimitiveType::float32: {
          // Multiples of 1/8 print identically in float32 and float64.
          float v = static_cast<float>(std::uniform_int_distribution<int>(-4096, 4096)(rng)) / 8.0f;
          prim.append(v);
          return static_cast<double>(v);
        }
        case PrimitiveType::float64: {
          double v = std::uniform_real_distribution<double>(-1e6, 1e6)(rng);
          prim.append(v);
          return v;
        }
        case PrimitiveType::bool8: {
          bool v = std::bernoulli_distribution(0.5)(rng);
          prim.append(v);
          return v;
        }
      }
      break;
    }
    case NodeKind::list_offset: {
      auto& list = dynamic_cast<ListOffsetBuilder&>(builder);
      int n = std::uniform_int_distribution<int>(0, 4)(rng);
      json out = json::array();
      Builder& content = list.begin_list();
      for (int i = 0; i < n; ++i) out.push_back(drive(content, form.content(), rng));
      list.end_list();
      return out;
    }
    case NodeKind::record: {
      auto& record = dynamic_cast<RecordBuilder&>(builder);
      json out = json::object();
      for (std::size_t i = 0; i < form.fields().size(); ++i) {
        out[form.fields()[i]] = drive(record.field(form.fields()[i]), form.contents()[i], rng);
      }
      return out;
    }
  }
  return nullptr;
}

RandomCase random_case(std::uint64_t seed, int max_depth, std::int64_t max_length) {
  std::mt19937_64 rng(seed);
  int depth = std::uniform_int_distribution<int>(0, max_depth)(rng);
  Form form = random_form(rng, depth);
  auto length = std::uniform_int_distribution<std::int64_t>(0, max_length)(rng);
  auto builder = make_builder(form);
  json expected = json::array();
  for (std::int64_t i = 0; i < length; ++i) expected.push_back(drive(*builder, form, rng));
  return {form, builder->to_array(), std::move(expected)};
}

bool same_json(const std::string& engine_text, const json& expected) {
  return json::parse(engine_text) == expected;
}

}  // namespace raggedcore::testing

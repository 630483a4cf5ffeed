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
#include <memory>
#include <random>

#include <json.hpp>

#include "raggedcore/raggedcore.hpp"

namespace raggedcore::testing {

/// [[{x:1, y:[1.1]}, {x:2, y:[2.2, 0.2]}], [], [{x:3, y:[3.0, 0.3, 3.3]}]]
/// as var * {x: int64, y: var * float64}, built through the layout builder.
Array nested_records_array();

enum Field : std::size_t { one, two };

/// {one: float64, two: var * int32}, empty.
std::unique_ptr<RecordBuilder> one_two_builder();

/// The two-entry append sequence: one=1.1, two=[1]; one=2.2, two=[1, 2].
void replay_one_two(RecordBuilder& builder);

/// Random structure up to `depth` nesting levels. Records have 1-3 fields.
Form random_form(std::mt19937_64& rng, int depth);

/// Appends one random element of `form` to `builder` with explicit
/// append/begin_list/end_list calls and returns the JSON it denotes.
nlohmann::json drive(Builder& builder, const Form& form, std::mt19937_64& rng);

struct RandomCase {
  Form form;
  Array array;
  nlohmann::json expected;  // shadow interpretation of the append sequence
};

/// Depth <= max_depth, outer length <= max_length; deterministic in `seed`.
RandomCase random_case(std::uint64_t seed, int max_depth = 3, std::int64_t max_length = 1000);

/// Elementwise comparison for JSON produced by the engine vs. expected JSON.
bool same_json(const std::string& engine_text, const nlohmann::json& expected);

}  // namespace raggedcore::testing

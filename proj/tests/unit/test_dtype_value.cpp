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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "raggedcore/raggedcore.hpp"

namespace rc = raggedcore;
using rc::PrimitiveType;

TEST(Dtype, WidthsAndNames) {
  EXPECT_EQ(rc::width(PrimitiveType::int32), 4u);
  EXPECT_EQ(rc::width(PrimitiveType::int64), 8u);
  EXPECT_EQ(rc::width(PrimitiveType::uint32), 4u);
  EXPECT_EQ(rc::width(PrimitiveType::float32), 4u);
  EXPECT_EQ(rc::width(PrimitiveType::float64), 8u);
  EXPECT_EQ(rc::width(PrimitiveType::bool8), 1u);
  EXPECT_EQ(rc::name(PrimitiveType::bool8), "bool");
  EXPECT_EQ(rc::parse_primitive("float32"), PrimitiveType::float32);
  EXPECT_EQ(rc::parse_primitive("bool"), PrimitiveType::bool8);
  EXPECT_FALSE(rc::parse_primitive("int8").has_value());
}

TEST(Dtype, ConvertWithinRange) {
  EXPECT_EQ(rc::convert(rc::Scalar{std::int64_t{5}}, PrimitiveType::int32), rc::Scalar{5});
  EXPECT_EQ(rc::convert(rc::Scalar{3.0}, PrimitiveType::int64), rc::Scalar{std::int64_t{3}});
  EXPECT_EQ(rc::convert(rc::Scalar{7}, PrimitiveType::float64), rc::Scalar{7.0});
  EXPECT_EQ(rc::convert(rc::Scalar{true}, PrimitiveType::bool8), rc::Scalar{true});
}

TEST(Dtype, ConvertRejectsOutOfRange) {
  EXPECT_THROW(rc::convert(rc::Scalar{std::int64_t{1} << 40}, PrimitiveType::int32), rc::RangeError);
  EXPECT_THROW(rc::convert(rc::Scalar{-1}, PrimitiveType::uint32), rc::RangeError);
  EXPECT_THROW(rc::convert(rc::Scalar{1e300}, PrimitiveType::int64), rc::RangeError);
}

TEST(Dtype, ConvertRejectsNonIntegral) {
  EXPECT_THROW(rc::convert(rc::Scalar{2.5}, PrimitiveType::int32), rc::RangeError);
}

TEST(Dtype, ConvertRejectsWrongKind) {
  EXPECT_THROW(rc::convert(rc::Scalar{1}, PrimitiveType::bool8), rc::TypeError);
  EXPECT_THROW(rc::convert(rc::Scalar{true}, PrimitiveType::float64), rc::TypeError);
}

TEST(Value, ScalarJson) {
  EXPECT_EQ(rc::Value(rc::Scalar{1.0}).to_json(), "1.0");
  EXPECT_EQ(rc::Value(rc::Scalar{1.1f}).to_json(), "1.1");
  EXPECT_EQ(rc::Value(rc::Scalar{0.1}).to_json(), "0.1");
  EXPECT_EQ(rc::Value(rc::Scalar{std::int64_t{-3}}).to_json(), "-3");
  EXPECT_EQ(rc::Value(rc::Scalar{true}).to_json(), "true");
  EXPECT_EQ(rc::Value(rc::Scalar{std::numeric_limits<double>::quiet_NaN()}).to_json(), "null");
  EXPECT_EQ(rc::Value(rc::Scalar{std::numeric_limits<float>::infinity()}).to_json(), "null");
}

TEST(Value, NestedJsonAndFields) {
  rc::Value v(rc::Value::Record{{"x", rc::Value(rc::Scalar{std::int64_t{1}})},
                                {"y", rc::Value(rc::Value::List{rc::Value(rc::Scalar{1.1})})}});
  EXPECT_EQ(v.to_json(), R"({"x":1,"y":[1.1]})");
  EXPECT_EQ(v.field("x"), rc::Value(rc::Scalar{std::int64_t{1}}));
  EXPECT_THROW(v.field("z"), rc::UnknownFieldError);
}

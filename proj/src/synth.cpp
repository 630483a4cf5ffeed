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

#include "raggedcore/synth.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "raggedcore/builder.hpp"

namespace raggedcore::synth {

double Rng::uniform() noexcept {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::poisson(double mean) noexcept {
  // Knuth: count uniforms until their product drops below e^-mean.
  const double limit = std::exp(-mean);
  std::int64_t k = 0;
  double product = uniform();
  while (product > limit) {
    ++k;
    product *= uniform();
  }
  return k;
}

double Rng::normal(double mean, double stddev) noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return mean + stddev * spare_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return mean + stddev * radius * std::cos(angle);
}

RaggedSample poisson_normal(std::int64_t rows, std::uint64_t seed, double mean, double sigma) {
  Rng rng(seed);
  RaggedSample out;
  out.counts.reserve(static_cast<std::size_t>(std::max<std::int64_t>(rows, 0)));
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < rows; ++i) {
    out.counts.push_back(rng.poisson(mean));
    total += out.counts.back();
  }
  out.content.reserve(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    out.content.push_back(static_cast<float>(rng.normal(0.0, sigma)));
  }
  return out;
}

Array float32_array(std::span<const float> values) {
  return Array(Layout::primitive(PrimitiveType::float32, Buffer::from_values<float>(values)));
}

std::vector<MuonEvent> muon_events(std::int64_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<MuonEvent> events;
  events.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 0; i < count; ++i) {
    MuonEvent ev;
    auto n = std::min<std::int64_t>(rng.poisson(2.0), 4);
    for (std::int64_t m = 0; m < n; ++m) {
      ev.charge.push_back(rng.uniform() < 0.5 ? -1 : 1);
      ev.pt.push_back(static_cast<float>(5.0 + std::abs(rng.normal(0.0, 25.0))));
      ev.eta.push_back(static_cast<float>(rng.normal(0.0, 1.2)));
      ev.phi.push_back(static_cast<float>(std::numbers::pi * (2.0 * rng.uniform() - 1.0)));
    }
    events.push_back(std::move(ev));
  }
  return events;
}

Array events_array(std::span<const MuonEvent> events) {
  enum Field : std::size_t { n_muon, charge, pt, eta, phi };
  auto list_of = [](PrimitiveType t) {
    return std::make_unique<ListOffsetBuilder>(std::make_unique<PrimitiveBuilder>(t));
  };
  RecordBuilder builder({{n_muon, "nMuon"},
                         {charge, "Muon_charge"},
                         {pt, "Muon_pt"},
                         {eta, "Muon_eta"},
                         {phi, "Muon_phi"}},
                        RecordField{n_muon, std::make_unique<PrimitiveBuilder>(PrimitiveType::uint32)},
                        RecordField{charge, list_of(PrimitiveType::int32)},
                        RecordField{pt, list_of(PrimitiveType::float32)},
                        RecordField{eta, list_of(PrimitiveType::float32)},
                        RecordField{phi, list_of(PrimitiveType::float32)});
  auto& n_builder = builder.field<PrimitiveBuilder>(n_muon);
  auto fill = [&](Field f, const auto& values) {
    auto& list = builder.field<ListOffsetBuilder>(f);
    auto& content = list.begin_list<PrimitiveBuilder>();
    for (auto v : values) content.append(v);
    list.end_list();
  };
  for (const auto& ev : events) {
    n_builder.append(static_cast<std::uint32_t>(ev.pt.size()));
    fill(charge, ev.charge);
    fill(pt, ev.pt);
    fill(eta, ev.eta);
    fill(phi, ev.phi);
  }
  return builder.to_array();
}

}  // namespace raggedcore::synth

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
#include <random>
#include <span>
#include <vector>

#include "raggedcore/array.hpp"

namespace raggedcore::synth {

/// Seeded generator with fixed sampling algorithms, so that outputs depend
/// only on the seed and not on the standard library's distribution code.
///   uniform: top 53 bits of mt19937_64 scaled to [0, 1)
///   poisson: Knuth's product-of-uniforms method
///   normal:  Box-Muller, both variates used
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() noexcept;
  std::int64_t poisson(double mean) noexcept;
  double normal(double mean, double stddev) noexcept;

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Per-row counts ~ Poisson(mean) and flat float32 content ~ Normal(0, sigma),
/// with content.size() == sum(counts).
struct RaggedSample {
  std::vector<std::int64_t> counts;
  std::vector<float> content;
};

RaggedSample poisson_normal(std::int64_t rows, std::uint64_t seed, double mean = 1.5,
                            double sigma = 45.0);

/// Flat float32 array over `values` (copied once into a buffer).
Array float32_array(std::span<const float> values);

struct MuonEvent {
  std::vector<std::int32_t> charge;
  std::vector<float> pt;
  std::vector<float> eta;
  std::vector<float> phi;
};

/// Events with Poisson(2) muons (capped at 4); charge +-1, pt in GeV,
/// eta ~ Normal(0, 1.2), phi uniform in (-pi, pi].
std::vector<MuonEvent> muon_events(std::int64_t count, std::uint64_t seed);

/// Record array {nMuon: uint32, Muon_charge: var * int32, Muon_pt,
/// Muon_eta, Muon_phi: var * float32} built through the layout builder.
Array events_array(std::span<const MuonEvent> events);

}  // namespace raggedcore::synth

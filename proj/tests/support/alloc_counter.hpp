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

#include <cstddef>

namespace raggedcore::testing {

/// Counts heap allocations made by this process while alive. Replaces the
/// global operator new for any binary that links alloc_counter.cpp.
class AllocationScope {
 public:
  AllocationScope();
  std::size_t count() const;
  std::size_t bytes() const;

 private:
  std::size_t start_count_;
  std::size_t start_bytes_;
};

}  // namespace raggedcore::testing

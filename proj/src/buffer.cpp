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

#include "raggedcore/buffer.hpp"

#include <algorithm>
#include <new>

namespace raggedcore {

namespace {
constexpr std::align_val_t kAlignment{64};
}

std::shared_ptr<std::byte> allocate_storage(std::size_t bytes) {
  // Zero-byte requests still get a unique allocation so storage_id() works.
  auto* raw = static_cast<std::byte*>(::operator new(std::max<std::size_t>(bytes, 1), kAlignment));
  return std::shared_ptr<std::byte>(raw, [](std::byte* p) { ::operator delete(p, kAlignment); });
}

Buffer Buffer::copy_of(std::span<const std::byte> bytes) {
  auto storage = allocate_storage(bytes.size());
  if (!bytes.empty()) std::memcpy(storage.get(), bytes.data(), bytes.size());
  return Buffer(std::move(storage), bytes.size());
}

Buffer Buffer::slice(std::size_t offset, std::size_t length) const noexcept {
  Buffer out = *this;
  offset = std::min(offset, size_);
  out.data_ = data_ + offset;
  out.size_ = std::min(length, size_ - offset);
  return out;
}

bool operator==(const Buffer& a, const Buffer& b) noexcept {
  return a.size() == b.size() &&
         (a.size() == 0 || std::memcmp(a.data(), b.data(), a.size()) == 0);
}

}  // namespace raggedcore

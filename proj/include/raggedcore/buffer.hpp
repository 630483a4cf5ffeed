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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <memory>
#include <span>
#include <type_traits>
#include <vector>

namespace raggedcore {

/// Reads a little-endian T from unaligned storage.
template <class T>
T load_le(const std::byte* p) noexcept {
  static_assert(std::is_trivially_copyable_v<T>);
  T out;
  if constexpr (std::endian::native == std::endian::little || sizeof(T) == 1) {
    std::memcpy(&out, p, sizeof(T));
  } else {
    std::byte tmp[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) tmp[i] = p[sizeof(T) - 1 - i];
    std::memcpy(&out, tmp, sizeof(T));
  }
  return out;
}

template <class T>
void store_le(std::byte* p, T value) noexcept {
  static_assert(std::is_trivially_copyable_v<T>);
  if constexpr (std::endian::native == std::endian::little || sizeof(T) == 1) {
    std::memcpy(p, &value, sizeof(T));
  } else {
    std::byte tmp[sizeof(T)];
    std::memcpy(tmp, &value, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T); ++i) p[i] = tmp[sizeof(T) - 1 - i];
  }
}

/// 64-byte aligned, uninitialized, shared byte storage.
std::shared_ptr<std::byte> allocate_storage(std::size_t bytes);

/// Immutable view of a contiguous little-endian byte range that keeps its
/// backing storage alive. Copies and slices share storage.
class Buffer {
 public:
  Buffer() = default;
  Buffer(std::shared_ptr<const std::byte> owner, std::size_t size) noexcept
      : data_(owner.get()), size_(size), owner_(std::move(owner)) {}

  /// Copies `bytes` into freshly allocated storage.
  static Buffer copy_of(std::span<const std::byte> bytes);

  template <class T>
  static Buffer from_values(std::span<const T> values) {
    auto storage = allocate_storage(values.size() * sizeof(T));
    for (std::size_t i = 0; i < values.size(); ++i) {
      store_le<T>(storage.get() + i * sizeof(T), values[i]);
    }
    return Buffer(std::move(storage), values.size() * sizeof(T));
  }

  template <class T>
  static Buffer from_values(std::initializer_list<T> values) {
    return from_values<T>(std::span<const T>(values.begin(), values.size()));
  }

  const std::byte* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::span<const std::byte> bytes() const noexcept { return {data_, size_}; }

  /// Sub-range sharing this buffer's storage. Clamped to the buffer end.
  Buffer slice(std::size_t offset, std::size_t length) const noexcept;

  template <class T>
  T get(std::size_t index) const noexcept {
    return load_le<T>(data_ + index * sizeof(T));
  }

  template <class T>
  std::vector<T> to_vector() const {
    std::vector<T> out(size_ / sizeof(T));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = get<T>(i);
    return out;
  }

  /// Identity of the backing allocation, for zero-copy assertions.
  const void* storage_id() const noexcept { return owner_.get(); }

 private:
  const std::byte* data_ = nullptr;
  std::size_t size_ = 0;
  std::shared_ptr<const std::byte> owner_;
};

bool operator==(const Buffer& a, const Buffer& b) noexcept;

}  // namespace raggedcore

// Copyright 2026 The twistcube Authors
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

#include "twistcube/topology/permutation.hpp"

#include <numeric>
#include <utility>

#include "twistcube/errors.hpp"

namespace twistcube {

PermutationTable::PermutationTable() : image_{0}, inverse_{0} {}

PermutationTable::PermutationTable(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  if (auto violation = validate_perm(image_)) {
    throw ValidationError("not a permutation: " + violation->message());
  }
  inverse_.resize(image_.size());
  for (std::size_t p = 0; p < image_.size(); ++p) {
    inverse_[image_[p]] = static_cast<std::uint32_t>(p);
  }
}

bool PermutationTable::is_identity() const {
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (image_[p] != p) return false;
  }
  return true;
}

std::string PermutationViolation::message() const {
  const char* what = kind == Kind::kOutOfRange ? "out-of-range value " : "duplicate value ";
  return what + std::to_string(value) + " at index " + std::to_string(index);
}

std::optional<PermutationViolation> validate_perm(std::span<const std::uint32_t> image) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t p = 0; p < image.size(); ++p) {
    const auto v = image[p];
    if (v >= image.size()) {
      return PermutationViolation{PermutationViolation::Kind::kOutOfRange, p, v};
    }
    if (seen[v]) {
      return PermutationViolation{PermutationViolation::Kind::kDuplicate, p, v};
    }
    seen[v] = true;
  }
  return std::nullopt;
}

std::optional<PermutationViolation> validate_perm(std::span<const std::uint32_t> image,
                                                  std::span<const std::uint32_t> inverse) {
  if (auto violation = validate_perm(image)) return violation;
  if (inverse.size() != image.size()) {
    return PermutationViolation{PermutationViolation::Kind::kOutOfRange, inverse.size(), 0};
  }
  for (std::size_t p = 0; p < image.size(); ++p) {
    if (inverse[image[p]] != p) {
      return PermutationViolation{PermutationViolation::Kind::kDuplicate, p, inverse[image[p]]};
    }
  }
  return std::nullopt;
}

PermutationTable identity_perm(unsigned k) {
  std::vector<std::uint32_t> image(std::size_t{1} << k);
  std::iota(image.begin(), image.end(), 0U);
  return PermutationTable(std::move(image));
}

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t key_state(const StreamKey& key) {
  std::uint64_t h = mix64(key.master_seed + kGolden);
  h = mix64(h ^ (0xd6e8feb86659fd93ULL * (static_cast<std::uint64_t>(key.generation) + 1)));
  h = mix64(h ^ (0xa0761d6478bd642fULL * (key.suffix + 1)) ^ (key.suffix >> 32));
  return h;
}

}  // namespace

KeyedStream::KeyedStream(const StreamKey& key) : state_(key_state(key)) {}

std::uint64_t KeyedStream::next() {
  ++counter_;
  return mix64(state_ + counter_ * kGolden);
}

std::uint64_t KeyedStream::bounded(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection of the biased low zone.
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double KeyedStream::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

KeyedStream task_stream(std::uint64_t seed, std::uint64_t task) {
  return KeyedStream(StreamKey{seed, 0xffffffffU, task});
}

PermutationTable uniform_perm_of_size(const StreamKey& key, std::size_t size) {
  std::vector<std::uint32_t> image(size);
  std::iota(image.begin(), image.end(), 0U);
  KeyedStream stream(key);
  for (std::size_t i = size; i > 1; --i) {
    const auto j = static_cast<std::size_t>(stream.bounded(i));
    std::swap(image[i - 1], image[j]);
  }
  return PermutationTable(std::move(image));
}

PermutationTable uniform_perm(const StreamKey& key, unsigned k) {
  return uniform_perm_of_size(key, std::size_t{1} << k);
}

}  // namespace twistcube

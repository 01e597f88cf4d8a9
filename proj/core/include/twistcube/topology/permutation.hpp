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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twistcube {

// A bijection on [0, size) stored together with its inverse.
class PermutationTable {
 public:
  // Identity on one element.
  PermutationTable();

  // Takes ownership of `image`. Throws ValidationError unless it is a
  // bijection on [0, image.size()).
  explicit PermutationTable(std::vector<std::uint32_t> image);

  std::size_t size() const { return image_.size(); }

  std::uint32_t operator()(std::uint32_t p) const { return image_[p]; }
  std::uint32_t inverse_of(std::uint32_t q) const { return inverse_[q]; }

  std::span<const std::uint32_t> image() const { return image_; }
  std::span<const std::uint32_t> inverse() const { return inverse_; }

  bool is_identity() const;

  friend bool operator==(const PermutationTable& a, const PermutationTable& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> inverse_;
};

struct PermutationViolation {
  enum class Kind { kOutOfRange, kDuplicate };
  Kind kind;
  std::size_t index;     // first offending position
  std::uint32_t value;   // the value found there

  std::string message() const;
};

// Checks that `image` is a bijection on [0, image.size()). Returns the first
// offending index rather than throwing.
std::optional<PermutationViolation> validate_perm(std::span<const std::uint32_t> image);

// Same check, plus inverse[image[p]] == p for every p.
std::optional<PermutationViolation> validate_perm(std::span<const std::uint32_t> image,
                                                  std::span<const std::uint32_t> inverse);

// Identity on [0, 2^k).
PermutationTable identity_perm(unsigned k);

// Key of a deterministic permutation stream. For the duplicube `suffix` is
// always 0; independent cubes use the value of the copy suffix.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint32_t generation = 0;
  std::uint64_t suffix = 0;

  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

// Counter-based generator: output i is a strong 64-bit mix of (key, i), so any
// stream can be produced independently of all others.
class KeyedStream {
 public:
  explicit KeyedStream(const StreamKey& key);
  explicit KeyedStream(std::uint64_t state) : state_(state) {}

  std::uint64_t next();

  // Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t bounded(std::uint64_t bound);

  // Uniform double in [0, 1).
  double uniform();

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

// 64-bit finalizer used for key mixing.
std::uint64_t mix64(std::uint64_t x);

// Stream for auxiliary randomness (Monte Carlo trials, sampling) keyed by a
// seed and a task index.
KeyedStream task_stream(std::uint64_t seed, std::uint64_t task);

// Fisher-Yates shuffle of [0, 2^k) driven by the stream for `key`.
PermutationTable uniform_perm(const StreamKey& key, unsigned k);

// Fisher-Yates shuffle of [0, size); used when a base graph makes the level
// size a non-power of two.
PermutationTable uniform_perm_of_size(const StreamKey& key, std::size_t size);

}  // namespace twistcube

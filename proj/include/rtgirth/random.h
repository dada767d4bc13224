// Copyright 2026 The rtgirth Authors.
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

#ifndef RTGIRTH_RANDOM_H_
#define RTGIRTH_RANDOM_H_

#include <cstdint>

namespace rtgirth {

// Counter-based generator: the n-th draw of a stream is a fixed function of
// (seed, stream key, n), so sequences are identical on every platform and
// independent sub-streams can be derived by index without sharing state.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), key_(Mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64() {
    return Mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_);
  }

  // Uniform in (0, 1]; never returns 0, so -log() of it is finite.
  double UniformOpenZero() {
    return static_cast<double>((NextU64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = NextU64();
    } while (x >= limit);
    return x % bound;
  }

  // An independent stream keyed by `index`. Does not advance this stream.
  RandomStream Substream(std::uint64_t index) const {
    RandomStream child(seed_);
    child.key_ = Mix(key_ ^ Mix(index + 0x632BE59BD9B4E019ULL));
    return child;
  }

 private:
  // splitmix64 finalizer.
  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rtgirth

#endif  // RTGIRTH_RANDOM_H_

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

#ifndef RTGIRTH_TYPES_H_
#define RTGIRTH_TYPES_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rtgirth {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
// Edge lengths and path lengths. Nonnegative; kInfinity marks "unreached".
using Length = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr Length kInfinity = std::numeric_limits<Length>::max();

// Addition that saturates at kInfinity instead of overflowing.
constexpr Length SaturatingAdd(Length a, Length b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  if (a > kInfinity - b) return kInfinity;
  return a + b;
}

// Natural logarithm of the vertex count, floored at ln 2 so that the
// parameter formulas (beta, sample counts, pass counts) stay positive on
// graphs with fewer than two vertices.
inline double LogN(std::int64_t n) {
  return std::log(static_cast<double>(n < 2 ? 2 : n));
}

// Raised by ParseGraph; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised by the brute-force oracles when an input exceeds their size cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace rtgirth

#endif  // RTGIRTH_TYPES_H_

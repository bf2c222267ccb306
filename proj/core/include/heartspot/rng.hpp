// Copyright 2026 The HeartSpot Authors. All Rights Reserved.
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

/// @file rng.hpp
/// @brief Portable seeded generator used for random-line masks.
///
/// Packets store only the seed and a generator identifier, so decoders must be
/// able to redraw the exact same lines on any platform. The standard library
/// distributions are implementation-defined, which rules them out here; this
/// header pins every step from the seed to the normal deviates.
///
/// Generator id 1 is PCG32 (XSH-RR 64/32, O'Neill 2014) seeded with the
/// reference `pcg32_srandom_r(seed, kStream)` procedure.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace heartspot {

enum class RngId : std::uint8_t {
  kPcg32 = 1,
};

class Pcg32 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  /// Stream selector; fixed so that the seed alone determines the sequence.
  static constexpr std::uint64_t kStream = 0xda3e39cb94b95bdbULL;

  explicit Pcg32(std::uint64_t seed) : Pcg32(seed, kStream) {}

  Pcg32(std::uint64_t seed, std::uint64_t stream)
      : state_(0), inc_((stream << 1u) | 1u) {
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * kMultiplier + inc_;
    const auto xorshifted =
        static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  /// Uniform on [0, 1) with 53 random bits (two 32-bit draws).
  double next_double() {
    const std::uint32_t a = next_u32() >> 5;  // 27 bits
    const std::uint32_t b = next_u32() >> 6;  // 26 bits
    return (a * 67108864.0 + b) * (1.0 / 9007199254740992.0);
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

/// Two independent standard normal deviates via the Box-Muller transform.
/// The radius uniform is taken as 1 - u so that it lies in (0, 1]; a draw of
/// exactly 1 yields the zero vector, which callers must reject.
inline std::array<double, 2> box_muller(Pcg32& rng) {
  const double u1 = 1.0 - rng.next_double();
  const double u2 = rng.next_double();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(theta), radius * std::sin(theta)};
}

}  // namespace heartspot

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

/// @file pooling.hpp
/// @brief Sliding-window order-statistic filters.
///
/// Geometry ("same" padding): an axis of extent N pooled with kernel k and
/// stride s produces ceil(N / s) outputs. The input is replicate-padded by
/// max(0, (out - 1) * s + k - N) samples, floor(pad / 2) of them on the
/// leading side. Output o covers padded samples [o * s, o * s + k).
///
/// Selection: each output is the element of rank floor(q * (n - 1)) in the
/// ascending sort of the n = k * k window values. No interpolation, so 8-bit
/// inputs give 8-bit outputs and median pooling of an even window picks the
/// lower middle value.

#pragma once

#include <cstddef>
#include <string>

#include "heartspot/image.hpp"

namespace heartspot {

struct PoolSpec {
  std::size_t kernel = 1;  // k
  std::size_t stride = 1;  // s
  double quantile = 0.5;   // q

  /// Median pooling used to privatize images before sampling.
  static constexpr PoolSpec median(std::size_t k = 12, std::size_t s = 2) {
    return {k, s, 0.5};
  }
  /// Quantile pooling used to densify sparse saliency reconstructions.
  static constexpr PoolSpec saliency(std::size_t k = 24, std::size_t s = 1,
                                     double q = 0.9) {
    return {k, s, q};
  }

  /// Throws kInvalidArgument unless k >= 1, s >= 1 and 0 <= q <= 1.
  void validate() const;

  bool operator==(const PoolSpec&) const = default;
};

/// Number of outputs along an axis of `extent` samples.
constexpr std::size_t pooled_extent(std::size_t extent, std::size_t stride) {
  return (extent + stride - 1) / stride;
}

/// Leading replicate-pad for an axis; see the file comment.
std::size_t leading_pad(std::size_t extent, const PoolSpec& spec);

/// Rank selected from a window of `count` values.
std::size_t quantile_rank(double quantile, std::size_t count);

Image8 quantile_pool(const Image8& img, const PoolSpec& spec);
ImageF quantile_pool(const ImageF& img, const PoolSpec& spec);

inline Image8 median_pool(const Image8& img, std::size_t k, std::size_t s) {
  return quantile_pool(img, PoolSpec{k, s, 0.5});
}
inline ImageF median_pool(const ImageF& img, std::size_t k, std::size_t s) {
  return quantile_pool(img, PoolSpec{k, s, 0.5});
}

}  // namespace heartspot

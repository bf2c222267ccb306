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

/// @file priors.hpp
/// @brief Spatial sampling priors: horizontal lines, seeded random lines, a
/// heart region of interest, and their combination.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "heartspot/image.hpp"
#include "heartspot/mask.hpp"
#include "heartspot/rng.hpp"

namespace heartspot {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Endpoints of one random line: `left.x <= 0`, `right.x >= 0`, both on the
/// unit circle.
struct CirclePointPair {
  Point2 left;
  Point2 right;
};

enum class HalfCircle { kLeft, kRight };

/// Normalizes `raw` to the unit circle and forces x onto the requested half.
/// `raw` must be nonzero.
Point2 project_to_half_circle(Point2 raw, HalfCircle half);

/// Draws a left point then a right point, each from an independent 2-D
/// standard normal. Zero-norm draws are rejected and redrawn.
CirclePointPair sample_circle_pair(Pcg32& rng);

/// Rows start, start + step, ... below stop, across the full width.
BinaryMask hline_mask(std::size_t height, std::size_t width, std::size_t start,
                      std::size_t stop, std::size_t step);

/// Union of `n_lines` Bresenham lines between circle pairs scaled by
/// max(height, width) around the raster centre. Depends only on the
/// arguments: every image gets the same lines for a given seed.
BinaryMask rline_mask(std::size_t height, std::size_t width,
                      std::size_t n_lines, std::uint64_t seed);

/// Threshold an averaged saliency image at element floor(q * n) of its
/// ascending sort (clamped to the last element); pixels at or above the
/// threshold are on. On distinct values exactly n - floor(q * n) pixels
/// survive.
BinaryMask heart_mask_from_saliency(const ImageF& avg_saliency,
                                    double threshold_quantile = 0.53);

/// Quantile giving roughly 47% coverage on the shipped reference saliency.
inline constexpr double kDefaultHeartQuantile = 0.53;

/// (hline | rline) & heart, with absent operands dropping out.
BinaryMask combine_masks(const BinaryMask* hline, const BinaryMask* rline,
                         const BinaryMask* heart);

/// Nearest-neighbour resample of a mask onto another grid; identity when the
/// dimensions already agree.
BinaryMask resample_mask(const BinaryMask& mask, std::size_t height,
                         std::size_t width);

/// Regenerates the mask described by `spec`. `heart` is required iff
/// spec.use_heart and is resampled to the spec grid when needed.
BinaryMask build_mask(const PriorSpec& spec, const BinaryMask* heart);

}  // namespace heartspot

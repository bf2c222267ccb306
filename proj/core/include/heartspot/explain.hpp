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

/// @file explain.hpp
/// @brief Saliency images rebuilt from attribution vectors over sampled
/// pixels. Nothing here takes the original radiograph: the mask comes from a
/// prior spec (or packet header) and the optional heart-mask file.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "heartspot/image.hpp"
#include "heartspot/image_io.hpp"
#include "heartspot/mask.hpp"
#include "heartspot/pooling.hpp"

namespace heartspot {

/// One finite attribution per sampled pixel, in mask scan order.
class AttributionVector {
 public:
  AttributionVector() = default;
  explicit AttributionVector(std::vector<float> values);

  std::span<const float> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Raw little-endian float32 file contents.
  static AttributionVector from_f32_bytes(std::span<const std::uint8_t> bytes);
  static AttributionVector load(const std::filesystem::path& path);
  Bytes to_f32_bytes() const;

 private:
  std::vector<float> values_;
};

ImageF attribution_to_image(const AttributionVector& attr,
                            const BinaryMask& mask);

/// Quantile pooling of a sparse attribution image. With the defaults each
/// output is the 90th percentile of its 24x24 neighbourhood, so windows with
/// fewer than ~10% nonzero samples go to zero and isolated outliers are
/// clamped.
ImageF smooth_attribution(const ImageF& sparse,
                          const PoolSpec& spec = PoolSpec::saliency());

/// Min-max normalization to [0, 255] and 8-bit grayscale PNG. A constant
/// image maps to all zeros.
Image8 normalize_heatmap(const ImageF& img);
Bytes render_heatmap(const ImageF& img);

}  // namespace heartspot

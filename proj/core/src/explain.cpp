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

#include "heartspot/explain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "heartspot/sparse.hpp"

namespace heartspot {

static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

AttributionVector::AttributionVector(std::vector<float> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "attribution " + std::to_string(i) + " is not finite");
    }
  }
}

AttributionVector AttributionVector::from_f32_bytes(
    std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 4 != 0) {
    throw Error(ErrorKind::kShape,
                "attribution file size " + std::to_string(bytes.size()) +
                    " is not a multiple of 4");
  }
  std::vector<float> values(bytes.size() / 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint32_t bits =
        static_cast<std::uint32_t>(bytes[4 * i]) |
        static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8 |
        static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16 |
        static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24;
    values[i] = std::bit_cast<float>(bits);
  }
  return AttributionVector(std::move(values));
}

AttributionVector AttributionVector::load(const std::filesystem::path& path) {
  return from_f32_bytes(read_file(path));
}

Bytes AttributionVector::to_f32_bytes() const {
  Bytes out(values_.size() * 4);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto bits = std::bit_cast<std::uint32_t>(values_[i]);
    for (int b = 0; b < 4; ++b) {
      out[4 * i + b] = static_cast<std::uint8_t>(bits >> (8 * b));
    }
  }
  return out;
}

ImageF attribution_to_image(const AttributionVector& attr,
                            const BinaryMask& mask) {
  return reconstruct<float>(attr.values(), mask);
}

ImageF smooth_attribution(const ImageF& sparse, const PoolSpec& spec) {
  return quantile_pool(sparse, spec);
}

Image8 normalize_heatmap(const ImageF& img) {
  Image8 out(img.height(), img.width());
  if (img.empty()) return out;
  const auto values = img.samples();
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double span = static_cast<double>(*hi_it) - lo;
  if (span <= 0.0) return out;
  auto dst = out.samples();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = (values[i] - lo) / span;
    dst[i] = static_cast<std::uint8_t>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
  }
  return out;
}

Bytes render_heatmap(const ImageF& img) {
  return encode_png(normalize_heatmap(img));
}

}  // namespace heartspot

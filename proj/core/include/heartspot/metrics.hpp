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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "heartspot/image.hpp"
#include "heartspot/image_io.hpp"
#include "heartspot/mask.hpp"

namespace heartspot {

/// Exact ratio of two counts.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  /// Value rounded half-up to `decimals` places, computed on the exact
  /// fraction (so 1/32 becomes 0.0313, not the binary-tie 0.0312).
  double rounded(int decimals = 4) const;
  /// Fixed-point rendering of rounded(), e.g. "0.0625".
  std::string str(int decimals = 4) const;
};

/// In-memory ratio: kept pixels over pixels of the cropped original.
Ratio imr(const BinaryMask& mask, std::size_t original_pixels);

/// On-disk ratio: packet bytes over JPEG(95) bytes of the cropped original.
Ratio odr(std::size_t packet_bytes, std::size_t original_jpeg_bytes);

/// Zeroes pixels outside `mask` and JPEG-encodes the result. Used for the
/// heart-only prior, where a dense region compresses better as an image.
Bytes encode_masked_jpeg(const Image8& img, const BinaryMask& mask,
                         int quality = 95);

}  // namespace heartspot

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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "heartspot/image_io.hpp"
#include "heartspot/mask.hpp"

namespace heartspot {

/// SHA-256 of a byte buffer.
Digest sha256(std::span<const std::uint8_t> bytes);
std::string to_hex(const Digest& digest);

/// A heart region of interest together with the digest of the file it came
/// from. Packets reference the heart mask by this digest only.
struct HeartReference {
  BinaryMask mask;
  Digest digest{};

  /// Accepts either a binary mask PNG (every sample 0 or 255) or a grayscale
  /// saliency average (8- or 16-bit), which is thresholded with
  /// heart_mask_from_saliency at `threshold_quantile`.
  static HeartReference from_file_bytes(std::span<const std::uint8_t> bytes,
                                        double threshold_quantile = 0.53);
  static HeartReference load(const std::filesystem::path& path,
                             double threshold_quantile = 0.53);
};

/// Averaged-saliency stand-in: a smooth elliptical bump in the lower middle of
/// the frame, offset toward the image's right (the patient's left in a PA
/// view). Values lie in [0, 1].
ImageF synthetic_heart_saliency(std::size_t height = 320,
                                std::size_t width = 320);

/// 16-bit PNG encoding of synthetic_heart_saliency, the file shipped as the
/// default reference.
Bytes synthetic_heart_png(std::size_t height = 320, std::size_t width = 320);

}  // namespace heartspot

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
#include <vector>

#include "heartspot/image.hpp"

namespace heartspot {

using Bytes = std::vector<std::uint8_t>;

struct ImageFormat {
  enum class Kind { kPng, kJpeg };

  Kind kind = Kind::kPng;
  int quality = 95;  // JPEG only

  static ImageFormat png() { return {Kind::kPng, 0}; }
  static ImageFormat jpeg(int quality = 95) { return {Kind::kJpeg, quality}; }
};

/// Decodes a PNG or JPEG (sniffed from the signature) to 8-bit grayscale.
/// Colour is collapsed with BT.601 luma weights and rounded; alpha is ignored;
/// 16-bit channels are scaled to 8 bits with rounding.
Image8 decode_image(std::span<const std::uint8_t> bytes);

/// Like decode_image but keeps 16-bit precision, returning samples in [0, 1].
/// Used for averaged saliency maps, which are often stored as 16-bit PNG.
ImageF decode_saliency(std::span<const std::uint8_t> bytes);

Bytes encode_image(const Image8& img, ImageFormat format);

/// Float images must be quantized (see to_u8 / render_heatmap) before encoding.
Bytes encode_image(const ImageF& img, ImageFormat format) = delete;

Bytes encode_png(const Image8& img);
Bytes encode_jpeg(const Image8& img, int quality = 95);

/// 16-bit grayscale PNG of a [0, 1] image; values are clamped then rounded.
Bytes encode_png16(const ImageF& img);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace heartspot

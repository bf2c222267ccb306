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

#include "heartspot/heart.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "heartspot/priors.hpp"

namespace heartspot {

Digest sha256(std::span<const std::uint8_t> bytes) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    throw Error(ErrorKind::kInvalidArgument, "sha256 digest failed");
  }
  return out;
}

std::string to_hex(const Digest& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * digest.size());
  for (std::uint8_t b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0xF]);
  }
  return out;
}

HeartReference HeartReference::from_file_bytes(
    std::span<const std::uint8_t> bytes, double threshold_quantile) {
  HeartReference ref;
  ref.digest = sha256(bytes);
  const ImageF saliency = decode_saliency(bytes);
  const bool binary =
      std::all_of(saliency.samples().begin(), saliency.samples().end(),
                  [](float v) { return v == 0.0f || v == 1.0f; });
  if (binary) {
    ref.mask = BinaryMask(saliency.height(), saliency.width());
    for (std::size_t r = 0; r < saliency.height(); ++r) {
      for (std::size_t c = 0; c < saliency.width(); ++c) {
        if (saliency(r, c) != 0.0f) ref.mask.set(r, c);
      }
    }
  } else {
    ref.mask = heart_mask_from_saliency(saliency, threshold_quantile);
  }
  PriorSpec spec;
  spec.use_heart = true;
  spec.heart_hash = ref.digest;
  spec.height = ref.mask.height();
  spec.width = ref.mask.width();
  ref.mask.set_spec(spec);
  if (ref.mask.popcount() == 0) {
    throw Error(ErrorKind::kEmptyMask, "heart mask selects no pixels");
  }
  return ref;
}

HeartReference HeartReference::load(const std::filesystem::path& path,
                                    double threshold_quantile) {
  return from_file_bytes(read_file(path), threshold_quantile);
}

ImageF synthetic_heart_saliency(std::size_t height, std::size_t width) {
  // Ellipse parameters as fractions of the frame; tilted like a cardiac
  // silhouette, with a softer lobe toward the apex.
  const double cy = 0.60 * static_cast<double>(height);
  const double cx = 0.54 * static_cast<double>(width);
  const double ry = 0.27 * static_cast<double>(height);
  const double rx = 0.30 * static_cast<double>(width);
  const double tilt = -0.35;  // radians
  const double ct = std::cos(tilt);
  const double st = std::sin(tilt);

  std::vector<float> out(height * width);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const double dy = static_cast<double>(r) + 0.5 - cy;
      const double dx = static_cast<double>(c) + 0.5 - cx;
      const double u = (ct * dx + st * dy) / rx;
      const double v = (-st * dx + ct * dy) / ry;
      const double d2 = u * u + v * v;
      out[r * width + c] = static_cast<float>(std::exp(-1.5 * d2));
    }
  }
  return ImageF(height, width, std::move(out));
}

Bytes synthetic_heart_png(std::size_t height, std::size_t width) {
  return encode_png16(synthetic_heart_saliency(height, width));
}

}  // namespace heartspot

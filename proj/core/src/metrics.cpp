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

#include "heartspot/metrics.hpp"

#include <cstdio>

namespace heartspot {

namespace {

std::uint64_t pow10(int decimals) {
  std::uint64_t p = 1;
  for (int i = 0; i < decimals; ++i) p *= 10;
  return p;
}

// round(numerator / denominator * 10^decimals) with ties rounding up. Split
// into quotient and remainder so the products stay well inside 64 bits for
// any pixel or byte count.
std::uint64_t scaled_half_up(const Ratio& r, int decimals) {
  if (decimals < 0 || decimals > 9) {
    throw Error(ErrorKind::kInvalidArgument, "decimals must be 0..9");
  }
  const std::uint64_t p = pow10(decimals);
  const std::uint64_t whole = r.numerator / r.denominator;
  const std::uint64_t rem = r.numerator % r.denominator;
  return whole * p + (2 * rem * p + r.denominator) / (2 * r.denominator);
}

}  // namespace

double Ratio::rounded(int decimals) const {
  return static_cast<double>(scaled_half_up(*this, decimals)) /
         static_cast<double>(pow10(decimals));
}

std::string Ratio::str(int decimals) const {
  const std::uint64_t scaled = scaled_half_up(*this, decimals);
  const std::uint64_t p = pow10(decimals);
  char buf[64];
  if (decimals == 0) {
    std::snprintf(buf, sizeof(buf), "%llu",
                  static_cast<unsigned long long>(scaled));
  } else {
    std::snprintf(buf, sizeof(buf), "%llu.%0*llu",
                  static_cast<unsigned long long>(scaled / p), decimals,
                  static_cast<unsigned long long>(scaled % p));
  }
  return buf;
}

Ratio imr(const BinaryMask& mask, std::size_t original_pixels) {
  if (original_pixels == 0) {
    throw Error(ErrorKind::kInvalidArgument, "original pixel count is zero");
  }
  return {mask.popcount(), original_pixels};
}

Ratio odr(std::size_t packet_bytes, std::size_t original_jpeg_bytes) {
  if (packet_bytes == 0 || original_jpeg_bytes == 0) {
    throw Error(ErrorKind::kInvalidArgument, "file sizes must be positive");
  }
  return {packet_bytes, original_jpeg_bytes};
}

Bytes encode_masked_jpeg(const Image8& img, const BinaryMask& mask,
                         int quality) {
  if (img.height() != mask.height() || img.width() != mask.width()) {
    throw Error(ErrorKind::kShape, "image and mask dimensions differ");
  }
  Image8 masked = img;
  const auto bits = mask.bits();
  auto samples = masked.samples();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) samples[i] = 0;
  }
  return encode_jpeg(masked, quality);
}

}  // namespace heartspot

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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "heartspot/error.hpp"

namespace heartspot {

/// Dense single-channel raster, row-major with a top-left origin.
///
/// Two sample types are used across the toolkit: `uint8_t` for X-ray pixels
/// and packet payloads, and `float` for attribution and saliency work.
template <typename T>
class Image {
  static_assert(std::is_same_v<T, std::uint8_t> || std::is_same_v<T, float>,
                "Image samples are either 8-bit or float");

 public:
  using value_type = T;

  Image() = default;
  Image(std::size_t height, std::size_t width, T fill = T{})
      : height_(height), width_(width), samples_(height * width, fill) {}
  Image(std::size_t height, std::size_t width, std::vector<T> samples)
      : height_(height), width_(width), samples_(std::move(samples)) {
    if (samples_.size() != height_ * width_) {
      throw Error(ErrorKind::kShape,
                  "sample count " + std::to_string(samples_.size()) +
                      " does not match " + std::to_string(height_) + "x" +
                      std::to_string(width_));
    }
    if constexpr (std::is_same_v<T, float>) {
      for (float v : samples_) {
        if (!std::isfinite(v)) {
          throw Error(ErrorKind::kInvalidArgument, "non-finite sample");
        }
      }
    }
  }

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  T& operator()(std::size_t row, std::size_t col) {
    return samples_[row * width_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const {
    return samples_[row * width_ + col];
  }

  std::span<T> samples() noexcept { return samples_; }
  std::span<const T> samples() const noexcept { return samples_; }
  std::span<const T> row(std::size_t r) const noexcept {
    return std::span<const T>(samples_).subspan(r * width_, width_);
  }

  bool operator==(const Image&) const = default;

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<T> samples_;
};

using Image8 = Image<std::uint8_t>;
using ImageF = Image<float>;

/// Square window of `side` pixels anchored at
/// (floor((H - side) / 2), floor((W - side) / 2)).
template <typename T>
Image<T> center_crop(const Image<T>& img, std::size_t side) {
  if (side == 0) {
    throw Error(ErrorKind::kInvalidArgument, "crop side must be positive");
  }
  if (side > img.height() || side > img.width()) {
    throw Error(ErrorKind::kDimension,
                "crop side " + std::to_string(side) + " exceeds image " +
                    std::to_string(img.height()) + "x" +
                    std::to_string(img.width()));
  }
  const std::size_t top = (img.height() - side) / 2;
  const std::size_t left = (img.width() - side) / 2;
  std::vector<T> out;
  out.reserve(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    auto src = img.row(top + r).subspan(left, side);
    out.insert(out.end(), src.begin(), src.end());
  }
  return Image<T>(side, side, std::move(out));
}

/// Maps 8-bit samples onto [0, 1].
ImageF to_float(const Image8& img);

/// Rounds [0, 1] floats back to 8-bit, clamping out-of-range values.
Image8 to_u8(const ImageF& img);

}  // namespace heartspot

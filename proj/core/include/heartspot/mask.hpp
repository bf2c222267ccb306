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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heartspot/image.hpp"
#include "heartspot/pooling.hpp"

namespace heartspot {

using Digest = std::array<std::uint8_t, 32>;

/// Everything needed to regenerate a sampling mask bit-exactly.
///
/// `height` and `width` describe the grid the mask lives on, which is the
/// median-pooled grid when `mp` is set. HLine rows are the half-open range
/// [hline_start, hline_stop) stepped by hline_step.
struct PriorSpec {
  bool use_hline = false;
  std::size_t hline_start = 0;
  std::size_t hline_stop = 0;
  std::size_t hline_step = 1;

  bool use_rline = false;
  std::size_t n_lines = 0;
  std::uint64_t seed = 0;
  std::uint8_t rng_id = 1;

  bool use_heart = false;
  Digest heart_hash{};

  std::optional<PoolSpec> mp;

  std::size_t height = 0;
  std::size_t width = 0;

  /// Throws kInvalidArgument describing the first violated invariant.
  void validate() const;

  bool operator==(const PriorSpec&) const = default;
};

/// Row-major boolean raster plus the recipe that produced it.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(std::size_t height, std::size_t width, bool fill = false)
      : height_(height), width_(width), bits_(height * width, fill ? 1 : 0) {}

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return bits_.size(); }

  bool test(std::size_t row, std::size_t col) const {
    return bits_[row * width_ + col] != 0;
  }
  void set(std::size_t row, std::size_t col, bool on = true) {
    bits_[row * width_ + col] = on ? 1 : 0;
  }

  /// One byte per pixel, 0 or 1.
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t popcount() const;

  const PriorSpec& spec() const noexcept { return spec_; }
  void set_spec(const PriorSpec& spec) { spec_ = spec; }

  /// Pixel-wise equality; the recipe is not compared.
  bool same_bits(const BinaryMask& other) const {
    return height_ == other.height_ && width_ == other.width_ &&
           bits_ == other.bits_;
  }

  /// 0 = off, 255 = on.
  Image8 to_image() const;
  /// Any nonzero sample is on.
  static BinaryMask from_image(const Image8& img);

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint8_t> bits_;
  PriorSpec spec_;
};

}  // namespace heartspot

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

#include "heartspot/pooling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace heartspot {

void PoolSpec::validate() const {
  if (kernel < 1 || stride < 1 || !(quantile >= 0.0 && quantile <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "pool spec needs k >= 1, s >= 1, 0 <= q <= 1 (got k=" +
                    std::to_string(kernel) + " s=" + std::to_string(stride) +
                    " q=" + std::to_string(quantile) + ")");
  }
}

std::size_t leading_pad(std::size_t extent, const PoolSpec& spec) {
  const std::size_t out = pooled_extent(extent, spec.stride);
  const std::size_t covered = (out - 1) * spec.stride + spec.kernel;
  return covered > extent ? (covered - extent) / 2 : 0;
}

std::size_t quantile_rank(double quantile, std::size_t count) {
  const auto rank = static_cast<std::size_t>(
      std::floor(quantile * static_cast<double>(count - 1)));
  return std::min(rank, count - 1);
}

namespace {

// Source index for every padded position along one axis.
std::vector<std::size_t> axis_taps(std::size_t extent, const PoolSpec& spec) {
  const std::size_t out = pooled_extent(extent, spec.stride);
  const std::size_t lead = leading_pad(extent, spec);
  const std::size_t padded = (out - 1) * spec.stride + spec.kernel;
  std::vector<std::size_t> taps(padded);
  for (std::size_t p = 0; p < padded; ++p) {
    const auto src = static_cast<std::ptrdiff_t>(p) -
                     static_cast<std::ptrdiff_t>(lead);
    taps[p] = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(
        src, 0, static_cast<std::ptrdiff_t>(extent) - 1));
  }
  return taps;
}

void check_input(std::size_t height, std::size_t width, const PoolSpec& spec) {
  spec.validate();
  if (height == 0 || width == 0) {
    throw Error(ErrorKind::kInvalidArgument, "cannot pool an empty image");
  }
}

// Generic path: gather each window and select with nth_element.
template <typename T>
Image<T> pool_by_selection(const Image<T>& img, const PoolSpec& spec) {
  const auto row_taps = axis_taps(img.height(), spec);
  const auto col_taps = axis_taps(img.width(), spec);
  const std::size_t out_h = pooled_extent(img.height(), spec.stride);
  const std::size_t out_w = pooled_extent(img.width(), spec.stride);
  const std::size_t k = spec.kernel;
  const std::size_t rank = quantile_rank(spec.quantile, k * k);

  Image<T> out(out_h, out_w);
  std::vector<T> window(k * k);
  for (std::size_t orow = 0; orow < out_h; ++orow) {
    for (std::size_t ocol = 0; ocol < out_w; ++ocol) {
      auto it = window.begin();
      for (std::size_t i = 0; i < k; ++i) {
        const auto src_row = img.row(row_taps[orow * spec.stride + i]);
        for (std::size_t j = 0; j < k; ++j) {
          *it++ = src_row[col_taps[ocol * spec.stride + j]];
        }
      }
      std::nth_element(window.begin(), window.begin() + rank, window.end());
      out(orow, ocol) = window[rank];
    }
  }
  return out;
}

// 8-bit path: a 256-bin histogram slides along each output row, adding and
// removing `stride` columns per step.
Image8 pool_by_histogram(const Image8& img, const PoolSpec& spec) {
  const auto row_taps = axis_taps(img.height(), spec);
  const auto col_taps = axis_taps(img.width(), spec);
  const std::size_t out_h = pooled_extent(img.height(), spec.stride);
  const std::size_t out_w = pooled_extent(img.width(), spec.stride);
  const std::size_t k = spec.kernel;
  const std::size_t s = spec.stride;
  const std::size_t rank = quantile_rank(spec.quantile, k * k);

  Image8 out(out_h, out_w);
  std::array<std::uint32_t, 256> hist{};
  auto column = [&](std::size_t orow, std::size_t padded_col, int delta) {
    const std::size_t c = col_taps[padded_col];
    for (std::size_t i = 0; i < k; ++i) {
      hist[img(row_taps[orow * s + i], c)] += delta;
    }
  };
  auto select = [&] {
    std::size_t seen = 0;
    for (std::size_t v = 0; v < hist.size(); ++v) {
      seen += hist[v];
      if (seen > rank) return static_cast<std::uint8_t>(v);
    }
    return std::uint8_t{255};
  };

  for (std::size_t orow = 0; orow < out_h; ++orow) {
    hist.fill(0);
    for (std::size_t j = 0; j < k; ++j) column(orow, j, +1);
    out(orow, 0) = select();
    for (std::size_t ocol = 1; ocol < out_w; ++ocol) {
      const std::size_t prev = (ocol - 1) * s;
      const std::size_t next = ocol * s;
      if (s >= k) {
        hist.fill(0);
        for (std::size_t j = 0; j < k; ++j) column(orow, next + j, +1);
      } else {
        for (std::size_t j = 0; j < s; ++j) {
          column(orow, prev + j, -1);
          column(orow, prev + k + j, +1);
        }
      }
      out(orow, ocol) = select();
    }
  }
  return out;
}

}  // namespace

Image8 quantile_pool(const Image8& img, const PoolSpec& spec) {
  check_input(img.height(), img.width(), spec);
  // Tiny windows are cheaper to sort than to histogram.
  if (spec.kernel * spec.kernel < 16) return pool_by_selection(img, spec);
  return pool_by_histogram(img, spec);
}

ImageF quantile_pool(const ImageF& img, const PoolSpec& spec) {
  check_input(img.height(), img.width(), spec);
  return pool_by_selection(img, spec);
}

}  // namespace heartspot

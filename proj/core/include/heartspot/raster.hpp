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
#include <vector>

namespace heartspot {

struct Pixel {
  std::int64_t row = 0;
  std::int64_t col = 0;

  bool operator==(const Pixel&) const = default;
};

/// Integer Bresenham rasterization from `from` to `to`, keeping only pixels
/// inside [0, height) x [0, width).
///
/// The major axis advances one pixel per step. On the minor axis the pixel
/// nearest the ideal line is chosen, and an exact half-way tie resolves
/// toward `from` (the error term steps only when strictly positive). The
/// endpoints may lie outside the raster; a segment that misses it yields an
/// empty list.
std::vector<Pixel> bresenham_line(Pixel from, Pixel to, std::size_t height,
                                  std::size_t width);

}  // namespace heartspot

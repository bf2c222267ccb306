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

#include "heartspot/raster.hpp"

#include <cstdlib>
#include <utility>

#include "heartspot/error.hpp"

namespace heartspot {

std::vector<Pixel> bresenham_line(Pixel from, Pixel to, std::size_t height,
                                  std::size_t width) {
  if (from == to) {
    throw Error(ErrorKind::kInvalidArgument,
                "line endpoints must differ");
  }
  const std::int64_t d_row = to.row - from.row;
  const std::int64_t d_col = to.col - from.col;
  const bool col_major = std::llabs(d_col) >= std::llabs(d_row);

  // Work in (major, minor) coordinates so one loop covers all octants.
  std::int64_t major = col_major ? from.col : from.row;
  std::int64_t minor = col_major ? from.row : from.col;
  const std::int64_t d_major = col_major ? d_col : d_row;
  const std::int64_t d_minor = col_major ? d_row : d_col;
  const std::int64_t step_major = d_major > 0 ? 1 : -1;
  const std::int64_t step_minor = d_minor > 0 ? 1 : -1;
  const std::int64_t run = std::llabs(d_major);
  const std::int64_t rise = std::llabs(d_minor);

  const auto h = static_cast<std::int64_t>(height);
  const auto w = static_cast<std::int64_t>(width);
  std::vector<Pixel> out;
  std::int64_t err = 2 * rise - run;
  for (std::int64_t i = 0; i <= run; ++i) {
    const Pixel p = col_major ? Pixel{minor, major} : Pixel{major, minor};
    if (p.row >= 0 && p.row < h && p.col >= 0 && p.col < w) out.push_back(p);
    if (err > 0) {
      minor += step_minor;
      err -= 2 * run;
    }
    err += 2 * rise;
    major += step_major;
  }
  return out;
}

}  // namespace heartspot

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

#include "heartspot/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "heartspot/rng.hpp"

namespace heartspot {
namespace {

double smoothstep(double edge0, double edge1, double x) {
  const double t = std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// 1 inside the ellipse, 0 outside, with a soft rim of `soft` (normalized).
double ellipse(double x, double y, double cx, double cy, double rx, double ry,
               double soft) {
  const double d = std::hypot((x - cx) / rx, (y - cy) / ry);
  return 1.0 - smoothstep(1.0 - soft, 1.0 + soft, d);
}

}  // namespace

Image8 xray_phantom(std::uint64_t seed, std::size_t height, std::size_t width) {
  Pcg32 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto jitter = [&](double base, double spread) {
    return base + spread * (2.0 * rng.next_double() - 1.0);
  };

  const double heart_cx = jitter(0.56, 0.03);
  const double heart_cy = jitter(0.62, 0.03);
  const double heart_rx = jitter(0.20, 0.03);
  const double heart_ry = jitter(0.16, 0.02);
  const double lung_ry = jitter(0.30, 0.03);
  const double lung_rx = jitter(0.17, 0.02);
  const double lung_cy = jitter(0.47, 0.03);
  const double rib_phase = jitter(0.0, 0.5);
  const double rib_gap = jitter(0.085, 0.01);
  const double exposure = jitter(1.0, 0.08);
  const double tilt = jitter(0.0, 0.05);

  std::vector<double> field(height * width);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const double y = (static_cast<double>(r) + 0.5) / height;
      const double x0 = (static_cast<double>(c) + 0.5) / width;
      const double x = x0 + tilt * (y - 0.5);

      double v = 0.72;  // soft tissue
      v -= 0.35 * (1.0 - ellipse(x, y, 0.5, 0.55, 0.52, 0.62, 0.08));  // air
      const double lungs =
          std::max(ellipse(x, y, 0.5 - 0.19, lung_cy, lung_rx, lung_ry, 0.12),
                   ellipse(x, y, 0.5 + 0.19, lung_cy, lung_rx, lung_ry, 0.12));
      v -= 0.42 * lungs;
      const double mediastinum = ellipse(x, y, 0.5, 0.45, 0.07, 0.35, 0.25);
      v += 0.25 * mediastinum;
      const double heart =
          ellipse(x, y, heart_cx, heart_cy, heart_rx, heart_ry, 0.15);
      v = std::max(v, 0.70 * heart + v * (1.0 - heart));
      const double spine = 1.0 - smoothstep(0.025, 0.04, std::abs(x - 0.5));
      v += 0.10 * spine;

      // Rib arcs: bands that curve down and away from the spine.
      const double lateral = std::abs(x - 0.5);
      const double rib_y = y - 0.9 * lateral * lateral - 0.10;
      const double phase = rib_y / rib_gap + rib_phase;
      const double band = 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * phase);
      v += 0.09 * std::pow(band, 6.0) * lungs * (lateral > 0.05 ? 1.0 : 0.0);

      // Clavicles.
      const double clav = std::abs(y - (0.14 + 0.25 * (lateral - 0.18)));
      v += 0.12 * (1.0 - smoothstep(0.008, 0.02, clav)) *
           (lateral > 0.04 && lateral < 0.33 ? 1.0 : 0.0);

      v *= exposure * (0.92 + 0.12 * y);  // heel effect
      field[r * width + c] = v;
    }
  }

  // Film grain: Gaussian noise smoothed with a 3x3 box for spatial correlation.
  std::vector<double> noise(height * width);
  for (std::size_t i = 0; i < noise.size(); i += 2) {
    const auto z = box_muller(rng);
    noise[i] = z[0];
    if (i + 1 < noise.size()) noise[i + 1] = z[1];
  }
  std::vector<std::uint8_t> out(height * width);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      double acc = 0.0;
      int n = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const auto rr = static_cast<std::ptrdiff_t>(r) + dr;
          const auto cc = static_cast<std::ptrdiff_t>(c) + dc;
          if (rr < 0 || cc < 0 || rr >= static_cast<std::ptrdiff_t>(height) ||
              cc >= static_cast<std::ptrdiff_t>(width)) {
            continue;
          }
          acc += noise[static_cast<std::size_t>(rr) * width +
                       static_cast<std::size_t>(cc)];
          ++n;
        }
      }
      const double grain = 0.035 * acc / std::sqrt(static_cast<double>(n));
      const double v = std::clamp(field[r * width + c] + grain, 0.0, 1.0);
      out[r * width + c] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
  }
  return Image8(height, width, std::move(out));
}

}  // namespace heartspot

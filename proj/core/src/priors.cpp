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

#include "heartspot/priors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "heartspot/raster.hpp"

namespace heartspot {

void PriorSpec::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorKind::kInvalidArgument, "prior spec: " + what);
  };
  if (!use_hline && !use_rline && !use_heart) {
    fail("at least one of hline, rline, heart must be enabled");
  }
  if (height == 0 || width == 0) fail("grid dimensions must be positive");
  if (use_hline) {
    if (hline_step == 0) fail("hline step must be positive");
    if (hline_start > hline_stop || hline_stop > height) {
      fail("hline range " + std::to_string(hline_start) + ":" +
           std::to_string(hline_stop) + " must satisfy 0 <= start <= stop <= " +
           std::to_string(height));
    }
  }
  if (use_rline) {
    if (n_lines == 0) fail("rline needs at least one line");
    if (rng_id != static_cast<std::uint8_t>(RngId::kPcg32)) {
      fail("unknown rng id " + std::to_string(rng_id));
    }
  }
  if (mp) mp->validate();
}

std::size_t BinaryMask::popcount() const {
  return static_cast<std::size_t>(
      std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Image8 BinaryMask::to_image() const {
  std::vector<std::uint8_t> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(),
                 [](std::uint8_t b) { return b ? std::uint8_t{255} : 0; });
  return Image8(height_, width_, std::move(out));
}

BinaryMask BinaryMask::from_image(const Image8& img) {
  BinaryMask mask(img.height(), img.width());
  std::transform(img.samples().begin(), img.samples().end(),
                 mask.bits_.begin(),
                 [](std::uint8_t v) { return v ? std::uint8_t{1} : 0; });
  return mask;
}

Point2 project_to_half_circle(Point2 raw, HalfCircle half) {
  const double norm = std::hypot(raw.x, raw.y);
  if (!(norm > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "cannot project a zero vector");
  }
  Point2 p{raw.x / norm, raw.y / norm};
  p.x = half == HalfCircle::kLeft ? -std::abs(p.x) : std::abs(p.x);
  return p;
}

namespace {

Point2 draw_on_half(Pcg32& rng, HalfCircle half) {
  for (;;) {
    const auto [x, y] = box_muller(rng);
    if (std::hypot(x, y) > 0.0) return project_to_half_circle({x, y}, half);
  }
}

std::int64_t round_half_away(double v) {
  return static_cast<std::int64_t>(std::round(v));
}

}  // namespace

CirclePointPair sample_circle_pair(Pcg32& rng) {
  CirclePointPair pair;
  pair.left = draw_on_half(rng, HalfCircle::kLeft);
  pair.right = draw_on_half(rng, HalfCircle::kRight);
  return pair;
}

BinaryMask hline_mask(std::size_t height, std::size_t width, std::size_t start,
                      std::size_t stop, std::size_t step) {
  PriorSpec spec;
  spec.use_hline = true;
  spec.hline_start = start;
  spec.hline_stop = stop;
  spec.hline_step = step;
  spec.height = height;
  spec.width = width;
  spec.validate();
  if (start == stop) {
    throw Error(ErrorKind::kEmptyMask,
                "hline range " + std::to_string(start) + ":" +
                    std::to_string(stop) + " selects no rows");
  }
  BinaryMask mask(height, width);
  for (std::size_t r = start; r < stop; r += step) {
    for (std::size_t c = 0; c < width; ++c) mask.set(r, c);
  }
  mask.set_spec(spec);
  return mask;
}

BinaryMask rline_mask(std::size_t height, std::size_t width,
                      std::size_t n_lines, std::uint64_t seed) {
  PriorSpec spec;
  spec.use_rline = true;
  spec.n_lines = n_lines;
  spec.seed = seed;
  spec.height = height;
  spec.width = width;
  spec.validate();

  const double center_row = (static_cast<double>(height) - 1.0) / 2.0;
  const double center_col = (static_cast<double>(width) - 1.0) / 2.0;
  const auto scale = static_cast<double>(std::max(height, width));
  auto endpoint = [&](Point2 p) {
    // x runs along columns, y along rows.
    return Pixel{round_half_away(center_row + scale * p.y),
                 round_half_away(center_col + scale * p.x)};
  };

  Pcg32 rng(seed);
  BinaryMask mask(height, width);
  for (std::size_t i = 0; i < n_lines; ++i) {
    const CirclePointPair pair = sample_circle_pair(rng);
    const Pixel a = endpoint(pair.left);
    const Pixel b = endpoint(pair.right);
    if (a == b) continue;  // both ends can round together on 1-pixel grids
    for (const Pixel& p : bresenham_line(a, b, height, width)) {
      mask.set(static_cast<std::size_t>(p.row), static_cast<std::size_t>(p.col));
    }
  }
  mask.set_spec(spec);
  return mask;
}

BinaryMask heart_mask_from_saliency(const ImageF& avg_saliency,
                                    double threshold_quantile) {
  if (!(threshold_quantile > 0.0 && threshold_quantile < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "threshold quantile must lie in (0, 1)");
  }
  if (avg_saliency.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty saliency image");
  }
  const auto values = avg_saliency.samples();
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) {
    throw Error(ErrorKind::kDegenerate,
                "saliency image is constant; threshold cannot separate it");
  }
  std::vector<float> sorted(values.begin(), values.end());
  const std::size_t n = sorted.size();
  // Element floor(q * n) of the ascending sort: identical to the 1-based
  // nearest rank ceil(q * n) unless q * n is whole, where it takes the next
  // element so that q = 0.5 over {0, 0, 1, 1} keeps exactly the ones.
  const auto index = std::min<std::size_t>(
      static_cast<std::size_t>(
          std::floor(threshold_quantile * static_cast<double>(n))),
      n - 1);
  std::nth_element(sorted.begin(), sorted.begin() + index, sorted.end());
  const float threshold = sorted[index];

  BinaryMask mask(avg_saliency.height(), avg_saliency.width());
  for (std::size_t r = 0; r < mask.height(); ++r) {
    for (std::size_t c = 0; c < mask.width(); ++c) {
      if (avg_saliency(r, c) >= threshold) mask.set(r, c);
    }
  }
  PriorSpec spec;
  spec.use_heart = true;
  spec.height = mask.height();
  spec.width = mask.width();
  mask.set_spec(spec);
  return mask;
}

BinaryMask combine_masks(const BinaryMask* hline, const BinaryMask* rline,
                         const BinaryMask* heart) {
  const BinaryMask* first = hline ? hline : rline ? rline : heart;
  if (first == nullptr) {
    throw Error(ErrorKind::kInvalidArgument, "combine needs at least one mask");
  }
  for (const BinaryMask* m : {hline, rline, heart}) {
    if (m && (m->height() != first->height() || m->width() != first->width())) {
      throw Error(ErrorKind::kShape,
                  "mask " + std::to_string(m->height()) + "x" +
                      std::to_string(m->width()) + " does not match " +
                      std::to_string(first->height()) + "x" +
                      std::to_string(first->width()));
    }
  }

  const std::size_t h = first->height();
  const std::size_t w = first->width();
  const bool any_lines = hline || rline;
  BinaryMask out(h, w);
  PriorSpec spec;
  spec.height = h;
  spec.width = w;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      bool on = !any_lines || (hline && hline->test(r, c)) ||
                (rline && rline->test(r, c));
      if (heart) on = on && heart->test(r, c);
      if (on) out.set(r, c);
    }
  }
  if (hline) {
    const PriorSpec& s = hline->spec();
    spec.use_hline = s.use_hline;
    spec.hline_start = s.hline_start;
    spec.hline_stop = s.hline_stop;
    spec.hline_step = s.hline_step;
  }
  if (rline) {
    const PriorSpec& s = rline->spec();
    spec.use_rline = s.use_rline;
    spec.n_lines = s.n_lines;
    spec.seed = s.seed;
    spec.rng_id = s.rng_id;
  }
  if (heart) {
    spec.use_heart = true;
    spec.heart_hash = heart->spec().heart_hash;
  }
  out.set_spec(spec);
  if (out.popcount() == 0) {
    throw Error(ErrorKind::kEmptyMask, "combined mask selects no pixels");
  }
  return out;
}

BinaryMask resample_mask(const BinaryMask& mask, std::size_t height,
                         std::size_t width) {
  if (mask.height() == height && mask.width() == width) return mask;
  if (mask.size() == 0 || height == 0 || width == 0) {
    throw Error(ErrorKind::kShape, "cannot resample an empty mask");
  }
  BinaryMask out(height, width);
  for (std::size_t r = 0; r < height; ++r) {
    // Sample at the centre of each target cell.
    const std::size_t sr = std::min(mask.height() - 1,
                                    (2 * r + 1) * mask.height() / (2 * height));
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t sc = std::min(
          mask.width() - 1, (2 * c + 1) * mask.width() / (2 * width));
      if (mask.test(sr, sc)) out.set(r, c);
    }
  }
  out.set_spec(mask.spec());
  return out;
}

BinaryMask build_mask(const PriorSpec& spec, const BinaryMask* heart) {
  spec.validate();
  if (spec.use_heart && heart == nullptr) {
    throw Error(ErrorKind::kIntegrity,
                "prior uses a heart mask but none was supplied");
  }
  std::optional<BinaryMask> h, r, roi;
  if (spec.use_hline) {
    h = hline_mask(spec.height, spec.width, spec.hline_start, spec.hline_stop,
                   spec.hline_step);
  }
  if (spec.use_rline) {
    r = rline_mask(spec.height, spec.width, spec.n_lines, spec.seed);
  }
  if (spec.use_heart) roi = resample_mask(*heart, spec.height, spec.width);
  BinaryMask out = combine_masks(h ? &*h : nullptr, r ? &*r : nullptr,
                                 roi ? &*roi : nullptr);
  out.set_spec(spec);
  return out;
}

}  // namespace heartspot

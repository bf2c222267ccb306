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

#include <span>
#include <string>
#include <vector>

#include "heartspot/image.hpp"
#include "heartspot/mask.hpp"

namespace heartspot {

/// Samples at mask-true positions in row-major scan order.
template <typename T>
std::vector<T> flatten(const Image<T>& img, const BinaryMask& mask) {
  if (img.height() != mask.height() || img.width() != mask.width()) {
    throw Error(ErrorKind::kShape,
                "image " + std::to_string(img.height()) + "x" +
                    std::to_string(img.width()) + " vs mask " +
                    std::to_string(mask.height()) + "x" +
                    std::to_string(mask.width()));
  }
  std::vector<T> out;
  out.reserve(mask.popcount());
  const auto bits = mask.bits();
  const auto samples = img.samples();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(samples[i]);
  }
  return out;
}

/// Zero image with `values` scattered to the mask-true positions.
template <typename T>
Image<T> reconstruct(std::span<const T> values, const BinaryMask& mask) {
  const std::size_t expected = mask.popcount();
  if (values.size() != expected) {
    throw Error(ErrorKind::kShape,
                "flat vector has " + std::to_string(values.size()) +
                    " values, mask selects " + std::to_string(expected));
  }
  Image<T> out(mask.height(), mask.width());
  auto dst = out.samples();
  const auto bits = mask.bits();
  std::size_t next = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) dst[i] = values[next++];
  }
  return out;
}

}  // namespace heartspot

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

#include <cstdint>
#include <span>

#include "heartspot/image_io.hpp"

namespace heartspot {

/// Default xz preset (same as `xz -6` and Python's lzma.compress).
inline constexpr std::uint32_t kXzPreset = 6;

/// Single-threaded .xz stream with a CRC64 check; byte-deterministic.
Bytes xz_compress(std::span<const std::uint8_t> data,
                  std::uint32_t preset = kXzPreset);

/// Decodes a complete .xz stream. Truncated or damaged input throws
/// kCorruption.
Bytes xz_decompress(std::span<const std::uint8_t> stream);

}  // namespace heartspot

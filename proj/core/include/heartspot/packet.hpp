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

/// @file packet.hpp
/// @brief `.hspt` flat-pixel packets.
///
/// Layout (all multi-byte integers little-endian, 65-byte header):
///
///   offset  size  field
///        0     4  magic "HSPT"
///        4     1  version (1)
///        5     1  method flags: bit0 hline, bit1 rline, bit2 heart, bit3 mp
///        6     2  grid height
///        8     2  grid width
///       10     1  mp kernel
///       11     1  mp stride
///       12     2  hline start
///       14     2  hline stop (exclusive)
///       16     2  hline step
///       18     2  rline count
///       20     8  rline seed
///       28     1  rng id
///       29    32  heart-mask file SHA-256
///       61     4  payload length
///       65     -  payload: .xz stream (preset 6) of the flat pixel vector
///
/// Fields of disabled methods are zero. The grid is the sampling grid, i.e.
/// the median-pooled raster when bit3 is set. The heart mask itself is never
/// embedded; decoders must be handed the same file the encoder used.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "heartspot/heart.hpp"
#include "heartspot/image.hpp"
#include "heartspot/image_io.hpp"
#include "heartspot/mask.hpp"

namespace heartspot {

inline constexpr std::uint8_t kPacketMagic[4] = {'H', 'S', 'P', 'T'};
inline constexpr std::uint8_t kPacketVersion = 1;
inline constexpr std::size_t kPacketHeaderSize = 65;

namespace packet_flags {
inline constexpr std::uint8_t kHline = 1u << 0;
inline constexpr std::uint8_t kRline = 1u << 1;
inline constexpr std::uint8_t kHeart = 1u << 2;
inline constexpr std::uint8_t kMedianPool = 1u << 3;
}  // namespace packet_flags

/// Copy of `spec` with the fields of disabled methods zeroed and the median
/// pool quantile pinned to 0.5; this is exactly what a packet can carry.
PriorSpec canonical_spec(const PriorSpec& spec);

struct PacketHeader {
  PriorSpec spec;
  std::uint32_t payload_len = 0;
};

/// Serializes the header fields; the spec is validated and range-checked
/// against the field widths.
Bytes write_packet_header(const PriorSpec& spec, std::uint32_t payload_len);

/// Parses and validates the header. Bad magic, version, flags or field values
/// throw kFormat; fewer than kPacketHeaderSize bytes after a good magic throw
/// kCorruption.
PacketHeader read_packet_header(std::span<const std::uint8_t> bytes);

/// The raster that gets sampled: `img` itself, or its median pool when
/// spec.mp is set. Its dimensions must equal the spec grid.
Image8 sampling_image(const Image8& img, const PriorSpec& spec);

/// Mask for `spec`, checking that `heart` is present and matches the digest
/// recorded in the spec when the heart prior is enabled.
BinaryMask packet_mask(const PriorSpec& spec, const HeartReference* heart);

/// Median pool (if any), regenerate the mask, flatten, compress, and frame.
/// Byte-deterministic for identical inputs.
Bytes encode_packet(const Image8& img, const PriorSpec& spec,
                    const HeartReference* heart);

struct DecodedPacket {
  Image8 sparse;
  BinaryMask mask;
  PriorSpec spec;
};

DecodedPacket decode_packet(std::span<const std::uint8_t> bytes,
                            const HeartReference* heart);

}  // namespace heartspot

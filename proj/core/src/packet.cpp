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

#include "heartspot/packet.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <limits>
#include <string>

#include "heartspot/pooling.hpp"
#include "heartspot/priors.hpp"
#include "heartspot/sparse.hpp"
#include "heartspot/xz.hpp"

namespace heartspot {
namespace {

class Writer {
 public:
  explicit Writer(Bytes& out) : out_(out) {}

  void u8(std::uint64_t v, const char* field) { put(v, 1, field); }
  void u16(std::uint64_t v, const char* field) { put(v, 2, field); }
  void u32(std::uint64_t v, const char* field) { put(v, 4, field); }
  void u64(std::uint64_t v) { put(v, 8, "u64"); }
  void raw(std::span<const std::uint8_t> bytes) {
    out_.insert(out_.end(), bytes.begin(), bytes.end());
  }

 private:
  void put(std::uint64_t v, int width, const char* field) {
    if (width < 8 && v >> (8 * width) != 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("packet field ") + field + " value " +
                      std::to_string(v) + " does not fit in " +
                      std::to_string(8 * width) + " bits");
    }
    for (int i = 0; i < width; ++i) {
      out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  Bytes& out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t u8() { return get(1); }
  std::uint64_t u16() { return get(2); }
  std::uint64_t u32() { return get(4); }
  std::uint64_t u64() { return get(8); }
  void raw(std::span<std::uint8_t> out) {
    std::memcpy(out.data(), bytes_.data() + pos_, out.size());
    pos_ += out.size();
  }

 private:
  std::uint64_t get(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += width;
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void check_digest(const PriorSpec& spec, const HeartReference* heart) {
  if (!spec.use_heart) return;
  if (heart == nullptr) {
    throw Error(ErrorKind::kIntegrity,
                "packet uses a heart mask (sha256 " +
                    to_hex(spec.heart_hash) + ") but none was supplied");
  }
  if (heart->digest != spec.heart_hash) {
    throw Error(ErrorKind::kIntegrity,
                "heart mask digest mismatch: expected " +
                    to_hex(spec.heart_hash) + ", got " +
                    to_hex(heart->digest));
  }
}

}  // namespace

PriorSpec canonical_spec(const PriorSpec& spec) {
  PriorSpec out;
  out.height = spec.height;
  out.width = spec.width;
  out.hline_step = 0;
  out.rng_id = 0;
  if (spec.use_hline) {
    out.use_hline = true;
    out.hline_start = spec.hline_start;
    out.hline_stop = spec.hline_stop;
    out.hline_step = spec.hline_step;
  }
  if (spec.use_rline) {
    out.use_rline = true;
    out.n_lines = spec.n_lines;
    out.seed = spec.seed;
    out.rng_id = spec.rng_id;
  }
  if (spec.use_heart) {
    out.use_heart = true;
    out.heart_hash = spec.heart_hash;
  }
  if (spec.mp) out.mp = PoolSpec{spec.mp->kernel, spec.mp->stride, 0.5};
  return out;
}

Bytes write_packet_header(const PriorSpec& spec_in, std::uint32_t payload_len) {
  spec_in.validate();
  const PriorSpec spec = canonical_spec(spec_in);
  std::uint8_t flags = 0;
  if (spec.use_hline) flags |= packet_flags::kHline;
  if (spec.use_rline) flags |= packet_flags::kRline;
  if (spec.use_heart) flags |= packet_flags::kHeart;
  if (spec.mp) flags |= packet_flags::kMedianPool;

  Bytes out;
  out.reserve(kPacketHeaderSize);
  Writer w(out);
  w.raw(kPacketMagic);
  w.u8(kPacketVersion, "version");
  w.u8(flags, "flags");
  w.u16(spec.height, "height");
  w.u16(spec.width, "width");
  w.u8(spec.mp ? spec.mp->kernel : 0, "mp kernel");
  w.u8(spec.mp ? spec.mp->stride : 0, "mp stride");
  w.u16(spec.hline_start, "hline start");
  w.u16(spec.hline_stop, "hline stop");
  w.u16(spec.hline_step, "hline step");
  w.u16(spec.n_lines, "rline count");
  w.u64(spec.seed);
  w.u8(spec.rng_id, "rng id");
  w.raw(spec.heart_hash);
  w.u32(payload_len, "payload length");
  return out;
}

PacketHeader read_packet_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(bytes.begin(), bytes.begin() + 4,
                                      std::begin(kPacketMagic))) {
    throw Error(ErrorKind::kFormat, "not a packet (bad magic)");
  }
  if (bytes.size() < kPacketHeaderSize) {
    throw Error(ErrorKind::kCorruption,
                "packet header truncated at " + std::to_string(bytes.size()) +
                    " bytes");
  }
  Reader r(bytes.subspan(4));
  const auto version = r.u8();
  if (version != kPacketVersion) {
    throw Error(ErrorKind::kFormat,
                "unsupported packet version " + std::to_string(version));
  }
  const auto flags = static_cast<std::uint8_t>(r.u8());
  if ((flags & ~0x0Fu) != 0) {
    char hex[8];
    std::snprintf(hex, sizeof(hex), "0x%02x", flags);
    throw Error(ErrorKind::kFormat, std::string("unknown method flags ") + hex);
  }

  PacketHeader header;
  PriorSpec& spec = header.spec;
  spec.use_hline = flags & packet_flags::kHline;
  spec.use_rline = flags & packet_flags::kRline;
  spec.use_heart = flags & packet_flags::kHeart;
  spec.height = r.u16();
  spec.width = r.u16();
  const auto mp_k = r.u8();
  const auto mp_s = r.u8();
  if (flags & packet_flags::kMedianPool) {
    spec.mp = PoolSpec{mp_k, mp_s, 0.5};
  } else if (mp_k != 0 || mp_s != 0) {
    throw Error(ErrorKind::kFormat, "median pool fields set without its flag");
  }
  spec.hline_start = r.u16();
  spec.hline_stop = r.u16();
  spec.hline_step = r.u16();
  spec.n_lines = r.u16();
  spec.seed = r.u64();
  spec.rng_id = static_cast<std::uint8_t>(r.u8());
  r.raw(spec.heart_hash);
  header.payload_len = static_cast<std::uint32_t>(r.u32());

  try {
    spec.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::kFormat, std::string("invalid header: ") + e.what());
  }
  if (canonical_spec(spec) != spec) {
    throw Error(ErrorKind::kFormat, "fields of disabled methods are not zero");
  }
  return header;
}

Image8 sampling_image(const Image8& img, const PriorSpec& spec) {
  Image8 grid = spec.mp ? median_pool(img, spec.mp->kernel, spec.mp->stride)
                        : img;
  if (grid.height() != spec.height || grid.width() != spec.width) {
    throw Error(ErrorKind::kDimension,
                "sampling grid is " + std::to_string(grid.height()) + "x" +
                    std::to_string(grid.width()) + " but the prior expects " +
                    std::to_string(spec.height) + "x" +
                    std::to_string(spec.width));
  }
  return grid;
}

BinaryMask packet_mask(const PriorSpec& spec, const HeartReference* heart) {
  check_digest(spec, heart);
  return build_mask(spec, spec.use_heart ? &heart->mask : nullptr);
}

Bytes encode_packet(const Image8& img, const PriorSpec& spec,
                    const HeartReference* heart) {
  spec.validate();
  if (!spec.use_heart && heart != nullptr) {
    throw Error(ErrorKind::kInvalidArgument,
                "heart mask supplied for a prior without the heart method");
  }
  const BinaryMask mask = packet_mask(spec, heart);
  const Image8 grid = sampling_image(img, spec);
  const std::vector<std::uint8_t> flat = flatten(grid, mask);
  const Bytes payload = xz_compress(flat);
  if (payload.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::kInvalidArgument, "payload exceeds 4 GiB");
  }
  Bytes out =
      write_packet_header(spec, static_cast<std::uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

DecodedPacket decode_packet(std::span<const std::uint8_t> bytes,
                            const HeartReference* heart) {
  const PacketHeader header = read_packet_header(bytes);
  const auto payload = bytes.subspan(kPacketHeaderSize);
  if (payload.size() != header.payload_len) {
    throw Error(ErrorKind::kCorruption,
                "payload length field says " +
                    std::to_string(header.payload_len) + " bytes, found " +
                    std::to_string(payload.size()));
  }
  BinaryMask mask = packet_mask(header.spec, heart);
  const Bytes flat = xz_decompress(payload);
  if (flat.size() != mask.popcount()) {
    throw Error(ErrorKind::kCorruption,
                "payload holds " + std::to_string(flat.size()) +
                    " pixels but the mask selects " +
                    std::to_string(mask.popcount()));
  }
  Image8 sparse = reconstruct<std::uint8_t>(flat, mask);
  return {std::move(sparse), std::move(mask), header.spec};
}

}  // namespace heartspot

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

#include "heartspot/xz.hpp"

#include <lzma.h>

#include <string>

namespace heartspot {

Bytes xz_compress(std::span<const std::uint8_t> data, std::uint32_t preset) {
  if (preset > 9) {
    throw Error(ErrorKind::kInvalidArgument,
                "xz preset must be 0..9, got " + std::to_string(preset));
  }
  Bytes out(lzma_stream_buffer_bound(data.size()));
  std::size_t out_pos = 0;
  const lzma_ret ret =
      lzma_easy_buffer_encode(preset, LZMA_CHECK_CRC64, nullptr, data.data(),
                              data.size(), out.data(), &out_pos, out.size());
  if (ret != LZMA_OK) {
    throw Error(ErrorKind::kEncode,
                "lzma_easy_buffer_encode failed (" + std::to_string(ret) + ")");
  }
  out.resize(out_pos);
  return out;
}

Bytes xz_decompress(std::span<const std::uint8_t> stream) {
  lzma_stream strm = LZMA_STREAM_INIT;
  // Preset 6 needs about 9 MiB to decode; leave headroom for presets up to 9.
  if (lzma_stream_decoder(&strm, 128u << 20, 0) != LZMA_OK) {
    throw Error(ErrorKind::kCorruption, "cannot initialise xz decoder");
  }
  Bytes out;
  std::uint8_t chunk[16384];
  strm.next_in = stream.data();
  strm.avail_in = stream.size();
  lzma_ret ret = LZMA_OK;
  while (ret == LZMA_OK) {
    strm.next_out = chunk;
    strm.avail_out = sizeof(chunk);
    ret = lzma_code(&strm, LZMA_FINISH);
    out.insert(out.end(), chunk, chunk + (sizeof(chunk) - strm.avail_out));
  }
  const std::size_t trailing = strm.avail_in;
  lzma_end(&strm);
  if (ret != LZMA_STREAM_END) {
    throw Error(ErrorKind::kCorruption,
                ret == LZMA_BUF_ERROR
                    ? std::string("xz stream is truncated")
                    : "xz stream is damaged (lzma_ret " + std::to_string(ret) +
                          ")");
  }
  if (trailing != 0) {
    throw Error(ErrorKind::kCorruption,
                std::to_string(trailing) + " trailing bytes after xz stream");
  }
  return out;
}

}  // namespace heartspot

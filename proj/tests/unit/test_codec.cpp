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

#include <string>

#include "doctest.h"
#include "heartspot/heart.hpp"
#include "heartspot/metrics.hpp"
#include "heartspot/packet.hpp"
#include "heartspot/phantom.hpp"
#include "heartspot/pooling.hpp"
#include "heartspot/priors.hpp"
#include "heartspot/sparse.hpp"
#include "heartspot/xz.hpp"
#include "oracles.hpp"

namespace hs = heartspot;

namespace {

hs::PriorSpec hline_spec(bool mp) {
  hs::PriorSpec spec;
  spec.use_hline = true;
  if (mp) {
    spec.mp = hs::PoolSpec::median();
    spec.height = spec.width = 160;
    spec.hline_start = 50;
    spec.hline_stop = 150;
    spec.hline_step = 5;
  } else {
    spec.height = spec.width = 320;
    spec.hline_start = 100;
    spec.hline_stop = 300;
    spec.hline_step = 10;
  }
  return spec;
}

hs::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const hs::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return hs::ErrorKind::kIo;
}

}  // namespace

TEST_SUITE("codec") {

TEST_CASE("flatten and reconstruct") {
  std::mt19937_64 rng(21);
  const auto img = hs::testing::random_image(rng, 12, 9);
  const hs::BinaryMask ones(12, 9, true);
  const auto all = hs::flatten(img, ones);
  CHECK(std::equal(all.begin(), all.end(), img.samples().begin(),
                   img.samples().end()));

  hs::BinaryMask one(12, 9);
  one.set(4, 7);
  CHECK(hs::flatten(img, one) == std::vector<std::uint8_t>{img(4, 7)});

  const auto mask = hs::testing::random_mask(rng, 12, 9, 0.3);
  const auto back = hs::reconstruct<std::uint8_t>(hs::flatten(img, mask), mask);
  for (std::size_t i = 0; i < img.size(); ++i) {
    CHECK(back.samples()[i] == (mask.bits()[i] ? img.samples()[i] : 0));
  }

  const hs::BinaryMask empty(3, 3);
  CHECK(hs::reconstruct<std::uint8_t>({}, empty) == hs::Image8(3, 3));

  hs::BinaryMask corner(2, 2);
  corner.set(0, 0);
  const std::vector<std::uint8_t> seven{7};
  CHECK(hs::reconstruct<std::uint8_t>(seven, corner) ==
        hs::Image8(2, 2, std::vector<std::uint8_t>{7, 0, 0, 0}));

  CHECK(hs::flatten(hs::xray_phantom(1), hs::hline_mask(320, 320, 100, 300, 10))
            .size() == 6400);
  CHECK(kind_of([&] { hs::reconstruct<std::uint8_t>(seven, empty); }) ==
        hs::ErrorKind::kShape);
  CHECK(kind_of([&] { hs::flatten(img, empty); }) == hs::ErrorKind::kShape);
}

TEST_CASE("xz round trip and corruption") {
  std::mt19937_64 rng(22);
  const auto img = hs::testing::random_image(rng, 64, 64);
  const hs::Bytes data(img.samples().begin(), img.samples().end());
  const auto packed = hs::xz_compress(data);
  CHECK(packed == hs::xz_compress(data));
  CHECK(hs::xz_decompress(packed) == data);
  CHECK(hs::xz_decompress(hs::xz_compress({})).empty());

  hs::Bytes truncated(packed.begin(), packed.end() - 5);
  CHECK(kind_of([&] { hs::xz_decompress(truncated); }) ==
        hs::ErrorKind::kCorruption);
  hs::Bytes flipped = packed;
  flipped[packed.size() / 2] ^= 0x40;
  CHECK(kind_of([&] { hs::xz_decompress(flipped); }) ==
        hs::ErrorKind::kCorruption);
}

TEST_CASE("header round trip and canonical form") {
  hs::PriorSpec spec = hline_spec(true);
  spec.use_rline = true;
  spec.n_lines = 200;
  spec.seed = 0x0123456789abcdefULL;
  spec.use_heart = true;
  spec.heart_hash.fill(0xab);
  const auto bytes = hs::write_packet_header(spec, 1234);
  REQUIRE(bytes.size() == hs::kPacketHeaderSize);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "HSPT");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0x0f);
  CHECK(bytes[20] == 0xef);  // little-endian seed
  CHECK(bytes[27] == 0x01);
  const auto header = hs::read_packet_header(bytes);
  CHECK(header.spec == hs::canonical_spec(spec));
  CHECK(header.payload_len == 1234);

  hs::PriorSpec stray = hline_spec(false);
  stray.seed = 99;
  stray.n_lines = 7;
  const auto canon = hs::canonical_spec(stray);
  CHECK(canon.seed == 0);
  CHECK(canon.n_lines == 0);
}

TEST_CASE("header errors") {
  auto bytes = hs::write_packet_header(hline_spec(false), 0);
  auto bad = bytes;
  bad[0] = 'X';
  CHECK(kind_of([&] { hs::read_packet_header(bad); }) == hs::ErrorKind::kFormat);
  bad = bytes;
  bad[4] = 2;
  CHECK(kind_of([&] { hs::read_packet_header(bad); }) == hs::ErrorKind::kFormat);
  bad = bytes;
  bad[5] = 0x10;
  CHECK(kind_of([&] { hs::read_packet_header(bad); }) == hs::ErrorKind::kFormat);
  bad = bytes;
  bad[20] = 1;  // seed set although rline is off
  CHECK(kind_of([&] { hs::read_packet_header(bad); }) == hs::ErrorKind::kFormat);
  bad.assign(bytes.begin(), bytes.begin() + 30);
  CHECK(kind_of([&] { hs::read_packet_header(bad); }) ==
        hs::ErrorKind::kCorruption);
}

TEST_CASE("packet round trip matches the reconstruct path") {
  const auto img = hs::xray_phantom(4);
  for (bool mp : {false, true}) {
    const auto spec = hline_spec(mp);
    const auto packet = hs::encode_packet(img, spec, nullptr);
    CHECK(packet == hs::encode_packet(img, spec, nullptr));
    const auto decoded = hs::decode_packet(packet, nullptr);
    const auto grid = mp ? hs::median_pool(img, 12, 2) : img;
    const auto mask = hs::build_mask(spec, nullptr);
    CHECK(decoded.sparse ==
          hs::reconstruct<std::uint8_t>(hs::flatten(grid, mask), mask));
    CHECK(decoded.mask.same_bits(mask));
    CHECK(decoded.spec == hs::canonical_spec(spec));
  }
}

TEST_CASE("MP+HLine packet is far smaller than the JPEG") {
  const auto img = hs::xray_phantom(6);
  const auto packet = hs::encode_packet(img, hline_spec(true), nullptr);
  CHECK(packet.size() * 5 < hs::encode_jpeg(img, 95).size());
}

TEST_CASE("packet errors") {
  const auto img = hs::xray_phantom(8);
  const auto packet = hs::encode_packet(img, hline_spec(false), nullptr);

  hs::Bytes truncated(packet.begin(), packet.end() - 10);
  CHECK(kind_of([&] { hs::decode_packet(truncated, nullptr); }) ==
        hs::ErrorKind::kCorruption);

  const auto heart = hs::HeartReference::from_file_bytes(hs::synthetic_heart_png());
  hs::PriorSpec spec = hline_spec(false);
  spec.use_heart = true;
  spec.heart_hash = heart.digest;
  const auto with_heart = hs::encode_packet(img, spec, &heart);
  CHECK(hs::decode_packet(with_heart, &heart).mask.popcount() > 0);
  CHECK(kind_of([&] { hs::decode_packet(with_heart, nullptr); }) ==
        hs::ErrorKind::kIntegrity);

  const auto other = hs::HeartReference::from_file_bytes(
      hs::encode_png(heart.mask.to_image()));
  try {
    hs::decode_packet(with_heart, &other);
    FAIL("expected an integrity error");
  } catch (const hs::Error& e) {
    CHECK(e.kind() == hs::ErrorKind::kIntegrity);
    const std::string msg = e.what();
    CHECK(msg.find(hs::to_hex(heart.digest)) != std::string::npos);
    CHECK(msg.find(hs::to_hex(other.digest)) != std::string::npos);
  }

  CHECK(kind_of([&] { hs::encode_packet(hs::Image8(100, 100), hline_spec(false),
                                        nullptr); }) == hs::ErrorKind::kDimension);
}

TEST_CASE("masked jpeg") {
  const auto img = hs::xray_phantom(9);
  const hs::BinaryMask ones(320, 320, true);
  CHECK(hs::encode_masked_jpeg(img, ones) == hs::encode_jpeg(img, 95));
  const auto heart = hs::HeartReference::from_file_bytes(hs::synthetic_heart_png());
  CHECK(hs::encode_masked_jpeg(img, heart.mask).size() <
        hs::encode_jpeg(img, 95).size());
  const auto zeros = hs::decode_image(hs::encode_jpeg(hs::Image8(64, 64), 95));
  for (auto v : zeros.samples()) CHECK(v <= 2);
}

}  // TEST_SUITE

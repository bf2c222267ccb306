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

#include "doctest.h"
#include "heartspot/heart.hpp"
#include "heartspot/metrics.hpp"
#include "heartspot/priors.hpp"

namespace hs = heartspot;

TEST_SUITE("metrics") {

TEST_CASE("imr of the default line priors") {
  const auto hline = hs::imr(hs::hline_mask(320, 320, 100, 300, 10), 102400);
  CHECK(hline.numerator == 6400);
  CHECK(hline.value() == 0.0625);
  CHECK(hline.str() == "0.0625");
  const auto mp = hs::imr(hs::hline_mask(160, 160, 50, 150, 5), 102400);
  CHECK(mp.value() == 0.03125);
  CHECK(hs::imr(hs::BinaryMask(4, 4, true), 16).value() == 1.0);
  CHECK_THROWS_AS(hs::imr(hs::BinaryMask(4, 4, true), 0), hs::Error);
}

TEST_CASE("rounding is half-up on the exact fraction") {
  CHECK(hs::Ratio{1, 32}.str() == "0.0313");
  CHECK(hs::Ratio{1, 32}.rounded(4) == 0.0313);
  CHECK(hs::Ratio{1, 3}.str() == "0.3333");
  CHECK(hs::Ratio{2, 3}.str(2) == "0.67");
  CHECK(hs::Ratio{5, 2}.str(0) == "3");
  CHECK(hs::Ratio{7, 7}.str() == "1.0000");
  CHECK_THROWS_AS((hs::Ratio{1, 2}.str(12)), hs::Error);
}

TEST_CASE("odr") {
  CHECK(hs::odr(500, 500).value() == 1.0);
  CHECK(hs::odr(1, 4).str() == "0.2500");
  CHECK_THROWS_AS(hs::odr(0, 4), hs::Error);
  CHECK_THROWS_AS(hs::odr(4, 0), hs::Error);
}

TEST_CASE("imr ordering of the default priors") {
  const auto heart =
      hs::HeartReference::from_file_bytes(hs::synthetic_heart_png()).mask;
  const auto hline = hs::hline_mask(320, 320, 100, 300, 10);
  const auto mp_hline = hs::hline_mask(160, 160, 50, 150, 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    const auto rline = hs::rline_mask(320, 320, 200, seed);
    const auto combined = hs::combine_masks(&hline, &rline, &heart);
    CHECK(mp_hline.popcount() < hline.popcount());
    CHECK(hline.popcount() < combined.popcount());
    CHECK(combined.popcount() < rline.popcount());
    CHECK(rline.popcount() < heart.popcount());
  }
}

}  // TEST_SUITE

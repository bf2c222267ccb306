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
#include "heartspot/pooling.hpp"
#include "oracles.hpp"

namespace hs = heartspot;

TEST_SUITE("pooling") {

TEST_CASE("geometry of the default median pool") {
  CHECK(hs::pooled_extent(320, 2) == 160);
  // pad = 159 * 2 + 12 - 320 = 10, five of them leading
  CHECK(hs::leading_pad(320, hs::PoolSpec::median()) == 5);
  CHECK(hs::leading_pad(16, {1, 2, 0.5}) == 0);  // negative pad clamps to 0
  const auto out = hs::median_pool(hs::Image8(320, 320, 9), 12, 2);
  CHECK(out.height() == 160);
  CHECK(out.width() == 160);
}

TEST_CASE("rank rule") {
  CHECK(hs::quantile_rank(0.5, 4) == 1);
  CHECK(hs::quantile_rank(0.5, 9) == 4);
  CHECK(hs::quantile_rank(0.9, 576) == 517);
  CHECK(hs::quantile_rank(1.0, 576) == 575);
  CHECK(hs::quantile_rank(0.0, 576) == 0);
}

TEST_CASE("constant image stays constant") {
  const hs::Image8 img(17, 11, 42);
  for (double q : {0.0, 0.3, 1.0}) {
    const auto out = hs::quantile_pool(img, {4, 3, q});
    CHECK(out == hs::Image8(6, 4, 42));
  }
}

TEST_CASE("k = 1, s = 1 is the identity") {
  std::mt19937_64 rng(11);
  const auto img = hs::testing::random_image(rng, 13, 7);
  for (double q : {0.0, 0.5, 1.0}) CHECK(hs::quantile_pool(img, {1, 1, q}) == img);
}

TEST_CASE("hand-evaluated medians") {
  const hs::Image8 nine(3, 3, std::vector<std::uint8_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(hs::median_pool(nine, 3, 3) == hs::Image8(1, 1, 5));
  const hs::Image8 four(2, 2, std::vector<std::uint8_t>{0, 255, 255, 0});
  CHECK(hs::median_pool(four, 2, 2) == hs::Image8(1, 1, 0));
}

TEST_CASE("matches the sort oracle on both selection paths") {
  std::mt19937_64 rng(12);
  // k = 3 uses selection, k = 4 and k = 6 take the histogram path
  for (std::size_t k : {2, 3, 4, 6}) {
    for (std::size_t s : {1, 2, 3}) {
      for (double q : {0.0, 0.25, 0.5, 0.9, 1.0}) {
        const auto img = hs::testing::random_image(rng, 19, 14);
        CHECK(hs::quantile_pool(img, {k, s, q}) ==
              hs::testing::pool_oracle(img, k, s, q));
      }
    }
  }
}

TEST_CASE("float pooling matches the oracle") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> v(15 * 12);
  for (auto& x : v) x = u(rng);
  const hs::ImageF img(15, 12, v);
  for (std::size_t k : {1, 3, 5}) {
    for (double q : {0.0, 0.5, 0.9}) {
      CHECK(hs::quantile_pool(img, {k, 2, q}) ==
            hs::testing::pool_oracle(img, k, 2, q));
    }
  }
}

TEST_CASE("invalid specs are rejected") {
  const hs::Image8 img(4, 4);
  CHECK_THROWS_AS(hs::quantile_pool(img, {0, 1, 0.5}), hs::Error);
  CHECK_THROWS_AS(hs::quantile_pool(img, {2, 0, 0.5}), hs::Error);
  CHECK_THROWS_AS(hs::quantile_pool(img, {2, 1, 1.5}), hs::Error);
  CHECK_THROWS_AS(hs::quantile_pool(img, {2, 1, -0.1}), hs::Error);
}

}  // TEST_SUITE

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

#include <benchmark/benchmark.h>

#include "heartspot/heartspot.hpp"

namespace hs = heartspot;

namespace {

const hs::Image8& phantom() {
  static const hs::Image8 img = hs::xray_phantom(0);
  return img;
}

hs::PriorSpec mp_hline() {
  hs::PriorSpec s;
  s.use_hline = true;
  s.hline_start = 50;
  s.hline_stop = 150;
  s.hline_step = 5;
  s.mp = hs::PoolSpec::median();
  s.height = s.width = 160;
  return s;
}

void BM_MedianPool(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs::median_pool(phantom(), k, 2));
  }
}
BENCHMARK(BM_MedianPool)->Arg(3)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SaliencyPool(benchmark::State& state) {
  const auto mask = hs::hline_mask(320, 320, 100, 300, 10);
  const hs::AttributionVector attr(std::vector<float>(mask.popcount(), 1.0f));
  const auto sparse = hs::attribution_to_image(attr, mask);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs::smooth_attribution(sparse));
  }
}
BENCHMARK(BM_SaliencyPool)->Unit(benchmark::kMillisecond);

void BM_RlineMask(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs::rline_mask(320, 320, 200, seed++));
  }
}
BENCHMARK(BM_RlineMask)->Unit(benchmark::kMicrosecond);

void BM_EncodePacket(benchmark::State& state) {
  const auto spec = mp_hline();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs::encode_packet(phantom(), spec, nullptr));
  }
}
BENCHMARK(BM_EncodePacket)->Unit(benchmark::kMillisecond);

void BM_DecodePacket(benchmark::State& state) {
  const auto packet = hs::encode_packet(phantom(), mp_hline(), nullptr);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hs::decode_packet(packet, nullptr));
  }
}
BENCHMARK(BM_DecodePacket)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "heartspot/heartspot.hpp"
#include "oracles.hpp"

namespace hs = heartspot;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

constexpr std::size_t kSide = 320;
constexpr std::size_t kPixels = kSide * kSide;

hs::PriorSpec hline_spec() {
  hs::PriorSpec s;
  s.use_hline = true;
  s.hline_start = 100;
  s.hline_stop = 300;
  s.hline_step = 10;
  s.height = s.width = kSide;
  return s;
}

hs::PriorSpec mp_hline_spec() {
  hs::PriorSpec s;
  s.use_hline = true;
  s.hline_start = 50;
  s.hline_stop = 150;
  s.hline_step = 5;
  s.mp = hs::PoolSpec::median(12, 2);
  s.height = s.width = 160;
  return s;
}

const hs::HeartReference& shipped_heart() {
  static const hs::HeartReference heart =
      hs::HeartReference::from_file_bytes(hs::synthetic_heart_png());
  return heart;
}

// The six prior configurations compared in the IMR/ODR table.
std::vector<std::pair<std::string, hs::PriorSpec>> six_methods(
    std::uint64_t seed) {
  const auto& heart = shipped_heart();
  auto rline = [&](hs::PriorSpec s) {
    s.use_rline = true;
    s.n_lines = 200;
    s.seed = seed;
    return s;
  };
  auto with_heart = [&](hs::PriorSpec s) {
    s.use_heart = true;
    s.heart_hash = heart.digest;
    return s;
  };
  hs::PriorSpec rl;
  rl.height = rl.width = kSide;
  hs::PriorSpec mp_lines = mp_hline_spec();
  return {
      {"hline", hline_spec()},
      {"rline", rline(rl)},
      {"heart", with_heart(rl)},
      {"lines+heart", with_heart(rline(hline_spec()))},
      {"mp+lines+heart", with_heart(rline(mp_lines))},
      {"mp+hline", mp_hline_spec()},
  };
}

// --- criteria ----------------------------------------------------------------

Outcome hline_exact() {
  const auto img = hs::xray_phantom(0);
  const auto mask = hs::build_mask(hline_spec(), nullptr);
  const auto flat = hs::flatten(img, mask);
  const auto r = hs::imr(mask, kPixels);
  const bool ok = flat.size() == 6400 && r.numerator * 16 == r.denominator;
  return {ok, fmt("flat vector %zu, imr %llu/%llu = %.5f", flat.size(),
                  (unsigned long long)r.numerator,
                  (unsigned long long)r.denominator, r.value())};
}

Outcome mp_hline_exact() {
  const auto img = hs::xray_phantom(0);
  const auto spec = mp_hline_spec();
  const auto grid = hs::sampling_image(img, spec);
  const auto mask = hs::build_mask(spec, nullptr);
  const auto flat = hs::flatten(grid, mask);
  const auto r = hs::imr(mask, kPixels);
  const bool ok = grid.height() == 160 && grid.width() == 160 &&
                  flat.size() == 3200 && r.numerator * 32 == r.denominator;
  return {ok, fmt("grid %zux%zu, flat vector %zu, imr %.5f", grid.height(),
                  grid.width(), flat.size(), r.value())};
}

Outcome rline_ratio() {
  double sum = 0.0, lo = 1.0, hi = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const double v = hs::imr(hs::rline_mask(kSide, kSide, 200, seed), kPixels).value();
    sum += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double mean = sum / 10.0;
  return {mean >= 0.24 && mean <= 0.32,
          fmt("mean imr %.4f over seeds 0-9 (per-seed %.4f..%.4f), want [0.24, 0.32]",
              mean, lo, hi)};
}

Outcome combined_ratio() {
  const auto& heart = shipped_heart();
  const auto hline = hs::hline_mask(kSide, kSide, 100, 300, 10);
  double lo = 1.0, hi = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rline = hs::rline_mask(kSide, kSide, 200, seed);
    const double v =
        hs::imr(hs::combine_masks(&hline, &rline, &heart.mask), kPixels).value();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double coverage = hs::imr(heart.mask, kPixels).value();
  return {lo >= 0.12 && hi <= 0.22,
          fmt("heart coverage %.4f; imr %.4f..%.4f over seeds 0-9, want [0.12, 0.22]",
              coverage, lo, hi)};
}

Outcome odr_ordering() {
  double sum_h = 0.0, sum_mp = 0.0, worst_mp = 0.0;
  int per_image_violations = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto img = hs::xray_phantom(seed);
    const auto jpeg = hs::encode_jpeg(img, 95).size();
    const double h = hs::odr(hs::encode_packet(img, hline_spec(), nullptr).size(), jpeg).value();
    const double mp = hs::odr(hs::encode_packet(img, mp_hline_spec(), nullptr).size(), jpeg).value();
    sum_h += h;
    sum_mp += mp;
    worst_mp = std::max(worst_mp, mp);
    if (!(mp < h && h < 1.0)) ++per_image_violations;
  }
  const double h = sum_h / 20.0, mp = sum_mp / 20.0;
  return {mp < h && h < 1.0 && mp < 0.20 && per_image_violations == 0,
          fmt("mean ODR hline %.4f, mp+hline %.4f (max %.4f); ordering broken on %d of 20",
              h, mp, worst_mp, per_image_violations)};
}

Outcome lossless_round_trip() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> extra(0, 80);
  const auto& heart = shipped_heart();
  int checked = 0, failures = 0;
  for (int i = 0; i < 50; ++i) {
    const auto raw = hs::testing::random_image(rng, kSide + extra(rng), kSide + extra(rng));
    const auto img = hs::center_crop(raw, kSide);
    for (const auto& [name, spec] : six_methods(static_cast<std::uint64_t>(i))) {
      const hs::HeartReference* h = spec.use_heart ? &heart : nullptr;
      const auto packet = hs::encode_packet(img, spec, h);
      const auto decoded = hs::decode_packet(packet, h);
      const auto mask = hs::packet_mask(spec, h);
      const auto flat = hs::flatten(hs::sampling_image(img, spec), mask);
      const auto header = hs::read_packet_header(packet);
      const auto payload = hs::xz_decompress(std::span(packet).subspan(hs::kPacketHeaderSize));
      const bool ok =
          header.payload_len == packet.size() - hs::kPacketHeaderSize &&
          payload == hs::Bytes(flat.begin(), flat.end()) &&
          hs::flatten(decoded.sparse, decoded.mask) == flat &&
          decoded.sparse == hs::reconstruct<std::uint8_t>(flat, mask);
      failures += !ok;
      ++checked;
    }
  }
  return {failures == 0, fmt("%d of %d image/method pairs reproduce the flat vector "
                             "bit-exactly", checked - failures, checked)};
}

Outcome pooling_oracle() {
  std::mt19937_64 rng(7);
  int cases = 0, mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto img = hs::testing::random_image(rng, 16, 16);
    for (std::size_t k : {1, 2, 3, 5}) {
      for (std::size_t s : {1, 2}) {
        for (double q : {0.0, 0.5, 0.9, 1.0}) {
          ++cases;
          if (hs::quantile_pool(img, {k, s, q}) != hs::testing::pool_oracle(img, k, s, q)) {
            ++mismatches;
          }
        }
      }
    }
  }
  return {mismatches == 0, fmt("%d of %d configurations match the sort oracle",
                               cases - mismatches, cases)};
}

Outcome raster_oracle() {
  long pairs = 0, mismatches = 0, property_failures = 0;
  const auto inside = [](const hs::Pixel& p) {
    return p.row >= 0 && p.row < 8 && p.col >= 0 && p.col < 8;
  };
  for (long r0 = -8; r0 <= 8; ++r0) {
    for (long c0 = -8; c0 <= 8; ++c0) {
      for (long r1 = -8; r1 <= 8; ++r1) {
        for (long c1 = -8; c1 <= 8; ++c1) {
          if (r0 == r1 && c0 == c1) continue;
          ++pairs;
          const hs::Pixel a{r0, c0}, b{r1, c1};
          const auto got = hs::bresenham_line(a, b, 8, 8);
          if (got != hs::testing::reference_line(a, b, 8, 8)) ++mismatches;

          bool ok = true;
          // endpoints
          if (inside(a)) ok &= !got.empty() && got.front() == a;
          if (inside(b)) ok &= !got.empty() && got.back() == b;
          // connectivity: consecutive pixels are 8-neighbours
          for (std::size_t i = 1; i < got.size(); ++i) {
            const auto dr = std::labs(got[i].row - got[i - 1].row);
            const auto dc = std::labs(got[i].col - got[i - 1].col);
            ok &= std::max(dr, dc) == 1;
          }
          // monotonicity along both axes toward the far endpoint
          for (std::size_t i = 1; i < got.size(); ++i) {
            ok &= (got[i].row - got[i - 1].row) * (r1 >= r0 ? 1 : -1) >= 0;
            ok &= (got[i].col - got[i - 1].col) * (c1 >= c0 ? 1 : -1) >= 0;
          }
          for (const auto& p : got) ok &= inside(p);
          property_failures += !ok;
        }
      }
    }
  }
  return {mismatches == 0 && property_failures == 0,
          fmt("%ld segments: %ld oracle mismatches, %ld connectivity/endpoint/"
              "monotonicity failures",
              pairs, mismatches, property_failures)};
}

Outcome sampler() {
  constexpr int kPairs = 100000;
  constexpr int kBins = 16;
  // upper 1% point of chi-square with 15 degrees of freedom
  constexpr double kCritical = 30.578;
  hs::Pcg32 rng(12345);
  std::vector<int> left(kBins, 0), right(kBins, 0);
  int invariant_failures = 0;
  auto bin = [](double y, double x) {
    // angle in [-pi/2, pi/2] measured from the outward normal of the half
    const double phi = std::atan2(y, x) + std::numbers::pi / 2;
    return std::min(kBins - 1, static_cast<int>(phi / std::numbers::pi * kBins));
  };
  for (int i = 0; i < kPairs; ++i) {
    const auto p = hs::sample_circle_pair(rng);
    const bool ok = std::abs(std::hypot(p.left.x, p.left.y) - 1.0) <= 1e-9 &&
                    std::abs(std::hypot(p.right.x, p.right.y) - 1.0) <= 1e-9 &&
                    p.left.x <= 0.0 && p.right.x >= 0.0;
    invariant_failures += !ok;
    ++left[bin(p.left.y, -p.left.x)];
    ++right[bin(p.right.y, p.right.x)];
  }
  auto chi2 = [](const std::vector<int>& counts) {
    const double expected = static_cast<double>(kPairs) / kBins;
    double s = 0.0;
    for (int c : counts) s += (c - expected) * (c - expected) / expected;
    return s;
  };
  const double cl = chi2(left), cr = chi2(right);
  return {invariant_failures == 0 && cl < kCritical && cr < kCritical,
          fmt("%d invariant failures; chi-square left %.2f, right %.2f (critical %.3f)",
              invariant_failures, cl, cr, kCritical)};
}

Outcome determinism() {
  const fs::path root = hs::testing::scratch_dir("acceptance_determinism");
  std::ostringstream sink;
  auto cli = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "heartspot");
    return hs::cli::run(args, sink, sink);
  };
  if (cli({"phantom", "--count", "8", "--out", (root / "in").string()}) != 0 ||
      cli({"heart-reference", "--out", root.string()}) != 0) {
    return {false, "could not prepare inputs"};
  }
  const std::string heart = (root / "heart_reference.png").string();
  int compared = 0, differing = 0;
  for (const std::string method :
       {"hline", "rline", "heart", "lines+heart", "mp+lines+heart", "mp+hline"}) {
    std::vector<fs::path> runs;
    for (const auto& [tag, jobs] : {std::pair{"a", "1"}, {"b", "1"}, {"c", "8"}}) {
      runs.push_back(root / (method + "_" + tag));
      if (cli({"compress", (root / "in").string(), "--method", method,
               "--heart-mask", heart, "--seed", "77", "--jobs", jobs, "--out",
               runs.back().string()}) != 0) {
        return {false, "compress failed for " + method};
      }
    }
    for (int i = 0; i < 8; ++i) {
      const std::string name = fmt("phantom_%03d.hspt", i);
      const auto ref = hs::read_file(runs[0] / name);
      for (std::size_t r = 1; r < runs.size(); ++r) {
        ++compared;
        differing += hs::read_file(runs[r] / name) != ref;
      }
    }
  }
  fs::remove_all(root);
  return {differing == 0,
          fmt("%d packet comparisons (repeat run and jobs=1 vs jobs=8, six "
              "methods): %d differ",
              compared, differing)};
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 = no runtime bound
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"HLine exact count", 1.0, hline_exact},
      {"MP+HLine exact count", 1.0, mp_hline_exact},
      {"RLine ratio", 5.0, rline_ratio},
      {"Combined ratio", 5.0, combined_ratio},
      {"ODR ordering and scale", 30.0, odr_ordering},
      {"Lossless round-trip", 60.0, lossless_round_trip},
      {"Pooling oracle equivalence", 30.0, pooling_oracle},
      {"Rasterization oracle", 30.0, raster_oracle},
      {"Sampler correctness", 10.0, sampler},
      {"Determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::string timing = fmt("%.2fs", secs);
    if (c.limit_seconds > 0.0) timing += fmt(" < %.0fs", c.limit_seconds);
    if (!in_time) timing += " EXCEEDED";
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail
              << " [" << timing << "]" << std::endl;
  }
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria)
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "heartspot/error.hpp"
#include "heartspot/heart.hpp"
#include "heartspot/mask.hpp"

namespace heartspot::cli {

/// Process exit codes; stable for scripting.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // decode/io and anything uncategorized
  kUsage = 2,
  kIntegrity = 3,
  kFormat = 4,
  kShape = 5,
  kCorruption = 6,
};

int exit_code_for(ErrorKind kind);

enum class Method { kHline, kRline, kHeart, kLinesHeart, kMpLinesHeart, kMpHline };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct HlineRange {
  std::size_t start = 0;
  std::size_t stop = 0;
  std::size_t step = 1;
};

struct MedianPoolParams {
  std::size_t kernel = 12;
  std::size_t stride = 2;
};

enum class OutputFormat { kText, kJson };

/// Fully resolved run parameters (flags > config file > HEARTSPOT_SEED >
/// built-in defaults).
struct RunConfig {
  Method method = Method::kHline;
  std::uint64_t seed = 0;
  std::size_t crop_side = 320;
  std::optional<std::filesystem::path> heart_mask_path;
  std::size_t n_lines = 200;
  std::optional<HlineRange> hline_range;  // default depends on MP
  MedianPoolParams mp;
  std::size_t jobs = 1;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::kText;

  bool uses_hline() const;
  bool uses_rline() const;
  bool uses_heart() const;
  bool uses_mp() const;

  /// 100:300:10 on the full grid, 50:150:5 on the median-pooled grid.
  HlineRange effective_hline_range() const;
  std::size_t grid_side() const;
  std::size_t original_pixels() const { return crop_side * crop_side; }

  /// Prior for this config; `heart` supplies the digest when needed.
  PriorSpec prior_spec(const HeartReference* heart) const;
};

/// Parses "START:STOP:STEP" and "K:S". Throw kInvalidArgument on bad input.
HlineRange parse_hline_range(std::string_view text);
MedianPoolParams parse_mp(std::string_view text);

/// Runs the command line `args` (args[0] is the program name). All output
/// goes to `out`/`err`; files are written under the configured output dir.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace heartspot::cli

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

#include "heartspot/image.hpp"

namespace heartspot {

/// Deterministic chest-radiograph-like phantom: dark lung fields, a bright
/// mediastinum and cardiac shadow, spine, rib arcs, clavicles, a smooth
/// exposure gradient and correlated film grain. Anatomy proportions are
/// jittered by `seed`, so a range of seeds forms a small test corpus.
Image8 xray_phantom(std::uint64_t seed, std::size_t height = 320,
                    std::size_t width = 320);

}  // namespace heartspot

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

#include "heartspot/error.hpp"
#include "heartspot/explain.hpp"
#include "heartspot/heart.hpp"
#include "heartspot/image.hpp"
#include "heartspot/image_io.hpp"
#include "heartspot/mask.hpp"
#include "heartspot/metrics.hpp"
#include "heartspot/packet.hpp"
#include "heartspot/phantom.hpp"
#include "heartspot/pooling.hpp"
#include "heartspot/priors.hpp"
#include "heartspot/raster.hpp"
#include "heartspot/rng.hpp"
#include "heartspot/sparse.hpp"
#include "heartspot/xz.hpp"

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

#include <stdexcept>
#include <string>
#include <string_view>

namespace heartspot {

/// Failure categories. The CLI maps several of these onto stable exit codes.
enum class ErrorKind {
  kInvalidArgument,  // precondition violation by the caller
  kDecode,           // malformed PNG/JPEG input
  kEncode,           // codec library refused to encode
  kDimension,        // crop larger than the image, grid mismatch
  kShape,            // vector/mask length or dims mismatch
  kEmptyMask,        // mask would have no set bits
  kDegenerate,       // threshold cannot separate values
  kIntegrity,        // heart-mask digest mismatch or missing reference
  kFormat,           // bad packet magic/version/fields
  kCorruption,       // packet payload damaged or truncated
  kIo,               // filesystem failures
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heartspot

/*
 * Copyright 2026 The covred Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COVRED_ERROR_HPP
#define COVRED_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covred {

enum class ErrorCode {
  EmptyUniverse,
  DuplicateLabel,
  UnknownLabel,
  EmptyBlock,
  NotACover,
  EmptyFamily,
  DuplicateCoverName,
  UniverseMismatch,
  UnknownCoverName,
  SyntaxError,
  EmptySubset,
  LastCover,
  TooManyCovers,
  MissingValue,
  NonNumericUnderNumericStrategy,
  InvalidConfig,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every covred operation. `details()` carries the
/// offending items (uncovered labels, unknown names) in input order.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> details = {})
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const { return code_; }
  const std::vector<std::string>& details() const { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

/// Collects non-fatal warnings (dropped duplicate blocks, empty bins).
using Warnings = std::vector<std::string>;

}  // namespace covred

#endif  // COVRED_ERROR_HPP

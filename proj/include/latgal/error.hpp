// Copyright 2026 The latgal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latgal {

enum class ErrorKind {
  kNotALattice,
  kNotBounded,
  kCycleInCovers,
  kUnknownLabel,
  kDuplicateLabel,
  kEmptyInterval,
  kNotBelow,
  kNotCyclicallyGenerated,
  kNoClosure,
  kMultipleClosures,
  kNotModular,
  kNotMonotone,
  kNotAdjoint,
  kHypothesisNotMet,
  kNotTClosed,
  kTooLarge,
  kBoundExceeded,
  kBudgetExceeded,
  kParseError,
  kInvalidArgument,
  // A proved statement failed on a verified instance. Always a bug.
  kTheoremViolation,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kNotBounded: return "NotBounded";
    case ErrorKind::kCycleInCovers: return "CycleInCovers";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kEmptyInterval: return "EmptyInterval";
    case ErrorKind::kNotBelow: return "NotBelow";
    case ErrorKind::kNotCyclicallyGenerated: return "NotCyclicallyGenerated";
    case ErrorKind::kNoClosure: return "NoClosure";
    case ErrorKind::kMultipleClosures: return "MultipleClosures";
    case ErrorKind::kNotModular: return "NotModular";
    case ErrorKind::kNotMonotone: return "NotMonotone";
    case ErrorKind::kNotAdjoint: return "NotAdjoint";
    case ErrorKind::kHypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::kNotTClosed: return "NotTClosed";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kBoundExceeded: return "BoundExceeded";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kTheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

// Every failure in the library is reported through this type. `witness`
// carries the offending element indices when there are any (for example the
// pair lacking a meet, or the pair violating adjointness).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace latgal

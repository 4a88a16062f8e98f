// Copyright 2026 The ozkit Authors
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

namespace ozkit {

enum class ErrorKind {
  InvalidAlgebra,
  AlgebraMismatch,
  NotSelfAdjoint,
  NotPositive,
  InvalidMap,
  NotCompletelyPositive,
  NotContractive,
  InvalidArgument,
  NotOrderZero,
  InvalidFunction,
  InvalidRep,
  NotSubequivalent,
  DeltaTooLarge,
  EmbeddingTooLarge,
  Schema,
};

// Base of every error thrown by the library. The kind is what callers
// (the CLI, the Python layer) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Errors a user can cause by passing malformed input, as opposed to a
  // mathematical property failing to hold.
  bool is_usage_error() const noexcept {
    switch (kind_) {
      case ErrorKind::InvalidAlgebra:
      case ErrorKind::AlgebraMismatch:
      case ErrorKind::InvalidMap:
      case ErrorKind::InvalidArgument:
      case ErrorKind::EmbeddingTooLarge:
      case ErrorKind::Schema:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::NotCompletelyPositive: return "NotCompletelyPositive";
    case ErrorKind::NotContractive: return "NotContractive";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotOrderZero: return "NotOrderZero";
    case ErrorKind::InvalidFunction: return "InvalidFunction";
    case ErrorKind::InvalidRep: return "InvalidRep";
    case ErrorKind::NotSubequivalent: return "NotSubequivalent";
    case ErrorKind::DeltaTooLarge: return "DeltaTooLarge";
    case ErrorKind::EmbeddingTooLarge: return "EmbeddingTooLarge";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace ozkit

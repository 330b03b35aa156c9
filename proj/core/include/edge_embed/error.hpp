// Copyright 2026 The edge_embed Authors.
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

namespace edge_embed {

enum class ErrorCode {
  // network
  Disconnected,
  NonPositiveParameter,
  DuplicateLink,
  SelfLoop,
  InvalidId,
  // workload DAG
  CycleDetected,
  OrderViolation,
  NonPositiveStream,
  NegativeFlops,
  DuplicateEdge,
  EmptyDag,
  MissingOutputSize,
  AlreadyAugmented,
  // paths
  SamePair,
  PathExplosion,
  // embedding
  NotEntry,
  UnpopulatedPredecessor,
  TooLarge,
  // harness
  SchemaError,
  ConnectivityUnreachable,
  InvalidSpec,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure surfaced by the library. The code is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on.
class EmbedError : public std::runtime_error {
 public:
  EmbedError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

  /// Validation failures map to CLI exit code 2; PathExplosion maps to 3.
  bool is_validation_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace edge_embed

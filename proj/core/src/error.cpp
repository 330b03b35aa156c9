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

#include "edge_embed/error.hpp"

namespace edge_embed {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::DuplicateLink: return "DuplicateLink";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::NonPositiveStream: return "NonPositiveStream";
    case ErrorCode::NegativeFlops: return "NegativeFlops";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyDag: return "EmptyDag";
    case ErrorCode::MissingOutputSize: return "MissingOutputSize";
    case ErrorCode::AlreadyAugmented: return "AlreadyAugmented";
    case ErrorCode::SamePair: return "SamePair";
    case ErrorCode::PathExplosion: return "PathExplosion";
    case ErrorCode::NotEntry: return "NotEntry";
    case ErrorCode::UnpopulatedPredecessor: return "UnpopulatedPredecessor";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ConnectivityUnreachable: return "ConnectivityUnreachable";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

EmbedError::EmbedError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

bool EmbedError::is_validation_error() const noexcept {
  switch (code_) {
    case ErrorCode::PathExplosion:
    case ErrorCode::Io:
      return false;
    default:
      return true;
  }
}

}  // namespace edge_embed

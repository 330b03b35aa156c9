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

#include <filesystem>
#include <string>

#include "edge_embed/runner.hpp"

namespace edge_embed {

/// Writes summary.json, trials.csv (dag_id,algo,makespan_s,runtime_s,dag_size)
/// and one cdf_<algo>.csv (makespan_s,fraction) per algorithm into `dir`,
/// creating it if needed. Output is byte-stable for identical bundles.
void emit_report(const ReportBundle& bundle, const std::filesystem::path& dir);

std::string trials_csv(const ReportBundle& bundle);
std::string cdf_csv(const AlgorithmSummary& summary);
std::string summary_json(const ReportBundle& bundle);

/// Shortest round-trip decimal form of `x`.
std::string format_double(double x);

}  // namespace edge_embed

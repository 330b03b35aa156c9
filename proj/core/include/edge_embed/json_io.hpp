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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edge_embed/embedding.hpp"
#include "edge_embed/model.hpp"
#include "edge_embed/splitter.hpp"
#include "edge_embed/workload.hpp"

namespace edge_embed {

// Network:  {"servers":[{"id":0,"psi":2e10},...],
//            "links":[{"id":0,"u":0,"v":1,"b":3e7},...]}
// DAG:      {"functions":[{"id":0,"flops":1e9},...],
//            "edges":[{"src":0,"dst":1,"bits":5e6},...],
//            "dst_out":{"3":5e6}}
// The functions array order is the topological order. A DAG batch file is
// a JSON array of DAG objects.
//
// Malformed documents raise EmbedError(SchemaError); well-formed documents
// describing an invalid model raise the model's own validation error.

EdgeNetwork parse_network(std::string_view json);
std::string network_to_json(const EdgeNetwork& net);

DagInstance parse_dag(std::string_view json);
std::string dag_to_json(const DagInstance& dag);

/// Parses a DAG batch. Any failure is reported as SchemaError naming the
/// zero-based record index.
std::vector<DagInstance> parse_dag_array(std::string_view json);
std::string dags_to_json(std::span<const DagInstance> dags);

/// Ready times: a JSON array of seconds indexed by server id.
std::vector<double> parse_ready(std::string_view json);

/// placements, per-edge {src,dst,paths,z}, finish_times and makespan.
std::string embedding_to_json(const EmbeddingResult& result,
                              const AugmentedDag& dag);

std::string split_to_json(const SplitSolution& split);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

EdgeNetwork load_network(const std::filesystem::path& path);
/// Reads and validates a DAG batch file.
std::vector<DagInstance> import_dags(const std::filesystem::path& path);

}  // namespace edge_embed

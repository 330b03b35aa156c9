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

#include "edge_embed/json_io.hpp"

#include <fstream>
#include <sstream>

#include "edge_embed/error.hpp"
#include "json.hpp"

namespace edge_embed {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw EmbedError(ErrorCode::SchemaError, e.what());
  }
}

// Wraps nlohmann type/lookup errors so callers only see EmbedError.
template <typename Fn>
auto schema_guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw EmbedError(ErrorCode::SchemaError, e.what());
  }
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw EmbedError(ErrorCode::SchemaError,
                     std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

double number(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number()) {
    throw EmbedError(ErrorCode::SchemaError,
                     std::string("field \"") + key + "\" must be a number");
  }
  return v.get<double>();
}

std::size_t index_field(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number_unsigned()) {
    throw EmbedError(ErrorCode::SchemaError,
                     std::string("field \"") + key +
                         "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

const json& array_field(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_array()) {
    throw EmbedError(ErrorCode::SchemaError,
                     std::string("field \"") + key + "\" must be an array");
  }
  return v;
}

EdgeNetwork network_from(const json& doc) {
  std::vector<Server> servers;
  for (const json& s : array_field(doc, "servers")) {
    servers.push_back({index_field(s, "id"), number(s, "psi")});
  }
  std::vector<Link> links;
  for (const json& l : array_field(doc, "links")) {
    links.push_back({index_field(l, "id"), index_field(l, "u"),
                     index_field(l, "v"), number(l, "b")});
  }
  return EdgeNetwork(std::move(servers), std::move(links));
}

DagInstance dag_from(const json& doc) {
  std::vector<FunctionNode> functions;
  for (const json& f : array_field(doc, "functions")) {
    functions.push_back({index_field(f, "id"), number(f, "flops"), false});
  }
  std::vector<StreamEdge> edges;
  for (const json& e : array_field(doc, "edges")) {
    edges.push_back({index_field(e, "src"), index_field(e, "dst"),
                     number(e, "bits")});
  }
  OutputSizes out;
  if (doc.contains("dst_out")) {
    const json& m = doc.at("dst_out");
    if (!m.is_object()) {
      throw EmbedError(ErrorCode::SchemaError, "\"dst_out\" must be an object");
    }
    for (const auto& [key, value] : m.items()) {
      std::size_t id = 0;
      std::size_t used = 0;
      try {
        id = std::stoul(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size() || !value.is_number()) {
        throw EmbedError(ErrorCode::SchemaError,
                         "bad \"dst_out\" entry \"" + key + "\"");
      }
      out[id] = value.get<double>();
    }
  }
  DagInstance inst{WorkloadDag(std::move(functions), std::move(edges)),
                   std::move(out)};
  // Surface output-size problems at load time rather than at embed time.
  (void)inst.augmented();
  return inst;
}

ordered_json dag_to(const DagInstance& inst) {
  ordered_json doc;
  ordered_json functions = ordered_json::array();
  for (FunctionId f : inst.dag.order()) {
    functions.push_back({{"id", f}, {"flops", inst.dag.function(f).flops}});
  }
  ordered_json edges = ordered_json::array();
  for (const StreamEdge& e : inst.dag.edges()) {
    edges.push_back({{"src", e.src}, {"dst", e.dst}, {"bits", e.bits}});
  }
  ordered_json out = ordered_json::object();
  for (const auto& [f, bits] : inst.dst_out) out[std::to_string(f)] = bits;
  doc["functions"] = std::move(functions);
  doc["edges"] = std::move(edges);
  doc["dst_out"] = std::move(out);
  return doc;
}

}  // namespace

EdgeNetwork parse_network(std::string_view text) {
  json doc = parse_document(text);
  return schema_guard([&] { return network_from(doc); });
}

std::string network_to_json(const EdgeNetwork& net) {
  ordered_json doc;
  ordered_json servers = ordered_json::array();
  for (const Server& s : net.servers()) {
    servers.push_back({{"id", s.id}, {"psi", s.psi}});
  }
  ordered_json links = ordered_json::array();
  for (const Link& l : net.links()) {
    links.push_back({{"id", l.id}, {"u", l.u}, {"v", l.v}, {"b", l.throughput}});
  }
  doc["servers"] = std::move(servers);
  doc["links"] = std::move(links);
  return doc.dump(2) + "\n";
}

DagInstance parse_dag(std::string_view text) {
  json doc = parse_document(text);
  return schema_guard([&] { return dag_from(doc); });
}

std::string dag_to_json(const DagInstance& dag) {
  return dag_to(dag).dump(2) + "\n";
}

std::vector<DagInstance> parse_dag_array(std::string_view text) {
  json doc = parse_document(text);
  if (!doc.is_array()) {
    throw EmbedError(ErrorCode::SchemaError, "DAG batch must be a JSON array");
  }
  std::vector<DagInstance> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      out.push_back(schema_guard([&] { return dag_from(doc[i]); }));
    } catch (const EmbedError& e) {
      throw EmbedError(ErrorCode::SchemaError,
                       "record " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

std::string dags_to_json(std::span<const DagInstance> dags) {
  ordered_json doc = ordered_json::array();
  for (const DagInstance& d : dags) doc.push_back(dag_to(d));
  return doc.dump(2) + "\n";
}

std::vector<double> parse_ready(std::string_view text) {
  json doc = parse_document(text);
  if (!doc.is_array()) {
    throw EmbedError(ErrorCode::SchemaError, "ready times must be an array");
  }
  std::vector<double> out;
  for (const json& v : doc) {
    if (!v.is_number() || v.get<double>() < 0.0) {
      throw EmbedError(ErrorCode::SchemaError,
                       "ready times must be non-negative numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string embedding_to_json(const EmbeddingResult& result,
                              const AugmentedDag& dag) {
  ordered_json doc;
  doc["algorithm"] = result.algorithm;
  doc["makespan"] = result.makespan;
  doc["dummy_id"] = dag.dummy_id();
  doc["placements"] = result.placements;
  ordered_json edges = ordered_json::array();
  for (EdgeIndex e = 0; e < dag.edges().size(); ++e) {
    const StreamEdge& edge = dag.edge(e);
    const EdgeMapping& m = result.edge_mappings.at(e);
    ordered_json paths = ordered_json::array();
    for (const SimplePath& p : m.paths) paths.push_back(p.nodes);
    edges.push_back({{"src", edge.src},
                     {"dst", edge.dst},
                     {"bits", edge.bits},
                     {"same_server", m.same_server},
                     {"paths", std::move(paths)},
                     {"z", m.allocations}});
  }
  doc["edges"] = std::move(edges);
  doc["start_times"] = result.start_times;
  doc["finish_times"] = result.finish_times;
  return doc.dump(2) + "\n";
}

std::string split_to_json(const SplitSolution& split) {
  ordered_json doc;
  doc["tau"] = split.bottleneck_time;
  doc["z"] = split.allocations;
  return doc.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw EmbedError(ErrorCode::Io, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw EmbedError(ErrorCode::Io, "cannot write " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw EmbedError(ErrorCode::Io, "write failed for " + path.string());
}

EdgeNetwork load_network(const std::filesystem::path& path) {
  return parse_network(read_text_file(path));
}

std::vector<DagInstance> import_dags(const std::filesystem::path& path) {
  return parse_dag_array(read_text_file(path));
}

}  // namespace edge_embed

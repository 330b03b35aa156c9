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

#include "edge_embed/report.hpp"

#include <charconv>
#include <system_error>

#include "edge_embed/error.hpp"
#include "edge_embed/json_io.hpp"
#include "json.hpp"

namespace edge_embed {

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string trials_csv(const ReportBundle& bundle) {
  std::string out = "dag_id,algo,makespan_s,runtime_s,dag_size\n";
  for (const TrialRecord& t : bundle.trials) {
    out += std::to_string(t.dag_id) + "," + t.algorithm + "," +
           format_double(t.makespan) + "," + format_double(t.runtime) + "," +
           std::to_string(t.dag_size) + "\n";
  }
  return out;
}

std::string cdf_csv(const AlgorithmSummary& summary) {
  std::string out = "makespan_s,fraction\n";
  for (const CdfPoint& p : summary.cdf) {
    out += format_double(p.makespan) + "," + format_double(p.fraction) + "\n";
  }
  return out;
}

std::string summary_json(const ReportBundle& bundle) {
  nlohmann::ordered_json doc;
  doc["network_fingerprint"] = bundle.network_fingerprint;
  doc["servers"] = bundle.server_count;
  doc["links"] = bundle.link_count;
  doc["catalog_paths"] = bundle.catalog_paths;
  doc["dags"] = bundle.dag_count;
  doc["batch_size"] = bundle.batch_size;
  doc["seed"] = bundle.seed;
  doc["timing_recorded"] = bundle.timing_recorded;
  nlohmann::ordered_json algos = nlohmann::ordered_json::array();
  for (const AlgorithmSummary& a : bundle.algorithms) {
    algos.push_back({{"algorithm", a.algorithm},
                     {"mean_makespan_s", a.mean_makespan},
                     {"batch_mean_makespan_s", a.batch_means},
                     {"runtime_total_s", a.runtime_total}});
  }
  doc["algorithms"] = std::move(algos);
  nlohmann::ordered_json reductions = nlohmann::ordered_json::array();
  for (const Reduction& r : bundle.reductions) {
    reductions.push_back({{"algorithm", r.algorithm},
                          {"baseline", r.baseline},
                          {"mean_reduction", r.fraction}});
  }
  doc["reductions"] = std::move(reductions);
  return doc.dump(2) + "\n";
}

void emit_report(const ReportBundle& bundle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw EmbedError(ErrorCode::Io,
                     "cannot create " + dir.string() + ": " + ec.message());
  }
  write_text_file(dir / "summary.json", summary_json(bundle));
  write_text_file(dir / "trials.csv", trials_csv(bundle));
  for (const AlgorithmSummary& a : bundle.algorithms) {
    write_text_file(dir / ("cdf_" + a.algorithm + ".csv"), cdf_csv(a));
  }
}

}  // namespace edge_embed

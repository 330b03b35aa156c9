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

#include "edge_embed/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edge_embed/error.hpp"

namespace edge_embed {

void validate_split_problem(const SplitProblem& p) {
  if (p.coefficients.empty()) {
    throw EmbedError(ErrorCode::NonPositiveParameter,
                     "split problem needs at least one path");
  }
  if (!(std::isfinite(p.stream_size) && p.stream_size > 0.0)) {
    throw EmbedError(ErrorCode::NonPositiveParameter,
                     "stream size must be > 0");
  }
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    double a = p.coefficients[k];
    if (!(std::isfinite(a) && a > 0.0)) {
      throw EmbedError(ErrorCode::NonPositiveParameter,
                       "path coefficient " + std::to_string(k) + " must be > 0");
    }
  }
}

SplitSolution optimal_split(const SplitProblem& p) {
  validate_split_problem(p);
  double inverse_sum = 0.0;
  for (double a : p.coefficients) inverse_sum += 1.0 / a;

  SplitSolution s;
  s.bottleneck_time = optimal_bottleneck(inverse_sum, p.stream_size);
  s.allocations.reserve(p.coefficients.size());
  for (double a : p.coefficients) s.allocations.push_back(s.bottleneck_time / a);
  return s;
}

double bisection_oracle(const SplitProblem& p, double tol) {
  validate_split_problem(p);
  if (!(tol > 0.0)) {
    throw EmbedError(ErrorCode::NonPositiveParameter, "tolerance must be > 0");
  }
  // At level tau path k carries at most tau / A_k bits.
  auto feasible = [&p](double tau) {
    double carried = 0.0;
    for (double a : p.coefficients) carried += tau / a;
    return carried >= p.stream_size;
  };
  double lo = 0.0;
  double hi = p.stream_size *
              *std::min_element(p.coefficients.begin(), p.coefficients.end());
  while (hi - lo > tol) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double routing_time(std::span<const double> coefficients,
                    std::span<const double> allocations) {
  if (coefficients.size() != allocations.size()) {
    throw EmbedError(ErrorCode::InvalidId,
                     "coefficient and allocation counts differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    worst = std::max(worst, coefficients[k] * allocations[k]);
  }
  return worst;
}

double routing_time(std::span<const double> branch_times) {
  double worst = 0.0;
  for (double t : branch_times) worst = std::max(worst, t);
  return worst;
}

}  // namespace edge_embed

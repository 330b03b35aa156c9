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

#include <span>
#include <vector>

namespace edge_embed {

/// Split one data stream of `stream_size` bits over paths whose cost is
/// `coefficients[k]` seconds per bit, minimising the slowest branch.
struct SplitProblem {
  std::vector<double> coefficients;
  double stream_size = 0.0;
};

struct SplitSolution {
  std::vector<double> allocations;  // bits per path, same order as the problem
  double bottleneck_time = 0.0;     // seconds
};

/// Throws EmbedError(NonPositiveParameter) unless the coefficient list is
/// non-empty, every coefficient is positive and the stream size is positive.
void validate_split_problem(const SplitProblem& p);

/// Closed-form optimum of min ||diag(A) z||_inf s.t. sum z = s, z >= 0:
/// the bottleneck is s / sum_k(1/A_k) and every branch finishes at exactly
/// that time, so z_k = bottleneck / A_k.
SplitSolution optimal_split(const SplitProblem& p);

/// Optimal bottleneck from the precomputed harmonic sum sum_k(1/A_k).
inline double optimal_bottleneck(double inverse_coefficient_sum,
                                 double stream_size) noexcept {
  return stream_size / inverse_coefficient_sum;
}

/// Independent check of the optimum: bisection for the smallest level tau at
/// which every path can carry tau/A_k bits and together they carry the whole
/// stream. Searches [0, s * min_k A_k] until the bracket is narrower than
/// `tol` seconds.
double bisection_oracle(const SplitProblem& p, double tol);

/// Slowest branch: max_k coefficients[k] * allocations[k].
double routing_time(std::span<const double> coefficients,
                    std::span<const double> allocations);

/// Slowest branch given per-branch times directly.
double routing_time(std::span<const double> branch_times);

}  // namespace edge_embed

// Copyright 2026 The dqimc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQIMC_TJOIN_H
#define DQIMC_TJOIN_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dqimc/bitvec.h"
#include "dqimc/common.h"
#include "dqimc/graph.h"

namespace dqimc {

using TSet = VertexVector;

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (a, b) with a < b, ordered by a
    std::int64_t weight = 0;
};

/// Exact minimum-weight perfect matching on a complete graph given by a
/// symmetric distance matrix, by dynamic programming over subsets. The
/// lowest unmatched node always takes the smallest partner among optimal
/// choices. Throws std::invalid_argument on an odd node count and
/// BudgetExceeded above max_nodes.
Matching min_weight_perfect_matching(const std::vector<std::vector<std::int64_t>>& dist, int max_nodes = 22);

struct JoinResult {
    EdgeVector edges;
    std::size_t size = 0;
};

/// Minimum-cardinality subgraph whose odd-degree vertices are exactly T.
/// Pairs T by a minimum perfect matching on BFS distances, then xors the
/// matched shortest paths. Throws Infeasible if a component holds an odd
/// number of T-vertices.
JoinResult min_t_join(const Graph& graph, const TSet& t, const Budgets& budgets = {});

/// Solves f(beta) = alpha with |beta| <= l. Returns nullopt when no such beta
/// exists. When the girth is at least 2l+1 the answer is the unique one.
std::optional<EdgeVector> decode_parity(const Graph& graph, int l, const VertexVector& alpha,
                                        const Budgets& budgets = {});

}  // namespace dqimc

#endif

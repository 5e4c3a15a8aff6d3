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

#ifndef DQIMC_MAXCUT_H
#define DQIMC_MAXCUT_H

#include <string>
#include <vector>

#include "dqimc/common.h"
#include "dqimc/cut.h"
#include "dqimc/graph.h"

namespace dqimc {

struct MaxCutResult {
    double value = 0;
    CutAssignment assignment;
    std::string method;
    double elapsed_seconds = 0;
};

/// Exact optimum over all 2^{n-1} assignments with vertex 0 on the +1 side.
/// Among optimal assignments the lexicographically smallest side vector
/// (vertex 0 first) wins. Throws BudgetExceeded past budgets.assignment_log2.
MaxCutResult brute_force_maxcut(const Graph& graph, const Budgets& budgets = {});

/// Exact optimum in time O(2^k n) with k <= min(2 mu, n - 1): enumerate sides of the endpoints of
/// non-tree edges (each component's root pinned), then a bottom-up tree DP
/// over the BFS forest with those vertices clamped. Weighted graphs allowed.
/// Throws BudgetExceeded when k > budgets.fpt_log2.
MaxCutResult fpt_maxcut(const Graph& graph, const Budgets& budgets = {});

/// Two-colors every BFS tree by depth parity, cutting all tree edges.
MaxCutResult spanning_tree_cut(const Graph& graph);

}  // namespace dqimc

#endif

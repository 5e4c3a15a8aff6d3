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

#ifndef DQIMC_TREE_PARTITION_H
#define DQIMC_TREE_PARTITION_H

#include <vector>

#include "dqimc/common.h"
#include "dqimc/graph.h"

namespace dqimc {

/// Vertex-disjoint trees covering V such that any two are joined by at most
/// one edge of the graph.
struct TreePartition {
    std::vector<std::vector<int>> parts;       // sorted vertex sets
    std::vector<std::vector<int>> part_edges;  // edge ids inside each part
    /// Peel depth floor((g-3)/4); infinite on forests.
    ExtCount depth = ExtCount::infinite();
    ExtCount girth = ExtCount::infinite();
    int cross_edges = 0;
    /// Root of the spanning tree the peeling ran on (per component: the
    /// choice that gave the fewest parts).
    std::vector<int> roots;
    /// Set when the girth is below 7 (peel depth < 1); parts are singletons.
    bool degenerate = false;
};

/// Repeatedly detaches the subtree hanging from the depth-d ancestor of the
/// deepest leaf of a BFS spanning tree, d = floor((g-3)/4), until the
/// remaining tree is shallower than d. Each component is peeled from every
/// possible root and the partition with the fewest parts is kept. Both
/// partition properties are verified before returning; a violation throws
/// std::logic_error.
TreePartition tree_partition(const Graph& graph);

/// Peels from a fixed BFS root in each component (one root per component,
/// in component order).
TreePartition tree_partition(const Graph& graph, const std::vector<int>& roots);

/// Throws std::logic_error naming the first violated property.
void verify_tree_partition(const Graph& graph, const TreePartition& partition);

struct MuCertificate {
    std::vector<int> mu_per_component;
    int mu = 0;  // m - n + #components
    ExtCount girth = ExtCount::infinite();
    int non_tree_edges = 0;
    /// non_tree_edges == mu.
    bool bound_check = false;
};

MuCertificate mu_certificate(const Graph& graph);

}  // namespace dqimc

#endif

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

#ifndef DQIMC_PARITY_H
#define DQIMC_PARITY_H

#include <cstdint>
#include <vector>

#include "dqimc/bitvec.h"
#include "dqimc/graph.h"

namespace dqimc {

/// Edge-vertex incidence matrix over GF(2), one row per edge holding its two
/// endpoint columns.
class IncidenceMatrix {
   public:
    explicit IncidenceMatrix(const Graph& graph);

    std::size_t rows() const {
        return rows_.size();
    }
    std::size_t cols() const {
        return cols_;
    }
    bool at(std::size_t edge, std::size_t vertex) const {
        const Edge& e = rows_[edge];
        return static_cast<int>(vertex) == e.u || static_cast<int>(vertex) == e.v;
    }
    /// B^T beta.
    VertexVector transpose_times(const EdgeVector& beta) const;

   private:
    std::vector<Edge> rows_;
    std::size_t cols_;
};

/// Vertex degree parities of the subgraph beta, i.e. B^T beta.
VertexVector parity_map(const Graph& graph, const EdgeVector& beta);

/// True iff beta has even degree at every vertex (lies in the cycle space).
bool is_cycle_vector(const Graph& graph, const EdgeVector& beta);

/// Largest l such that the parity map is injective on subgraphs with at most
/// l edges: floor((g-1)/2) for finite girth g, infinite on forests.
ExtCount injectivity_radius(const Graph& graph);

/// Per-edge vertex masks (bit u | bit v) for graphs with n <= 64; the parity
/// of an edge set is the xor of its masks.
std::vector<std::uint64_t> edge_vertex_masks(const Graph& graph);

}  // namespace dqimc

#endif

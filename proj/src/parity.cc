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

#include "dqimc/parity.h"

#include <stdexcept>

namespace dqimc {

IncidenceMatrix::IncidenceMatrix(const Graph& graph)
    : rows_(graph.edges().begin(), graph.edges().end()), cols_(static_cast<std::size_t>(graph.num_vertices())) {
}

VertexVector IncidenceMatrix::transpose_times(const EdgeVector& beta) const {
    if (beta.size() != rows_.size()) {
        throw std::invalid_argument("edge vector length does not match edge count");
    }
    VertexVector alpha(cols_);
    for (std::size_t e : beta.ones()) {
        alpha.flip(static_cast<std::size_t>(rows_[e].u));
        alpha.flip(static_cast<std::size_t>(rows_[e].v));
    }
    return alpha;
}

VertexVector parity_map(const Graph& graph, const EdgeVector& beta) {
    return IncidenceMatrix(graph).transpose_times(beta);
}

bool is_cycle_vector(const Graph& graph, const EdgeVector& beta) {
    return parity_map(graph, beta).none();
}

ExtCount injectivity_radius(const Graph& graph) {
    Girth g = girth(graph);
    if (g.length.is_infinite()) {
        return ExtCount::infinite();
    }
    return ExtCount((g.length.value() - 1) / 2);
}

std::vector<std::uint64_t> edge_vertex_masks(const Graph& graph) {
    if (graph.num_vertices() > 64) {
        throw std::invalid_argument("edge_vertex_masks needs n <= 64");
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(graph.num_edges()));
    for (const Edge& e : graph.edges()) {
        masks.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    }
    return masks;
}

}  // namespace dqimc

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

#include "dqimc/cut.h"

#include <stdexcept>

namespace dqimc {

namespace {

void check(const Graph& graph, const VertexVector& sides) {
    if (sides.size() != static_cast<std::size_t>(graph.num_vertices())) {
        throw std::invalid_argument("assignment length does not match vertex count");
    }
}

}  // namespace

int cut_size(const Graph& graph, const VertexVector& sides) {
    check(graph, sides);
    int c = 0;
    for (const Edge& e : graph.edges()) {
        c += sides.get(static_cast<std::size_t>(e.u)) != sides.get(static_cast<std::size_t>(e.v));
    }
    return c;
}

double cut_weight(const Graph& graph, const VertexVector& sides) {
    check(graph, sides);
    double w = 0;
    for (int e = 0; e < graph.num_edges(); ++e) {
        const Edge& ed = graph.edge(e);
        if (sides.get(static_cast<std::size_t>(ed.u)) != sides.get(static_cast<std::size_t>(ed.v))) {
            w += graph.weight(e);
        }
    }
    return w;
}

}  // namespace dqimc

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

#ifndef DQIMC_GRAPH_H
#define DQIMC_GRAPH_H

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dqimc/bitvec.h"
#include "dqimc/common.h"

namespace dqimc {

struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex ids 0..n-1 and stable edge ids
/// 0..m-1 given by input order. Immutable after construction.
///
/// Every edge is stored with u < v. Each vertex's incidence list is sorted by
/// neighbor id, which fixes the exploration order of every traversal and makes
/// all derived objects deterministic.
class Graph {
   public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops, duplicate edges, ids out of
    /// range, or negative/mis-sized weights. Endpoints are reordered to u < v.
    Graph(int num_vertices, std::vector<Edge> edges, std::optional<std::vector<double>> weights = std::nullopt);

    int num_vertices() const {
        return n_;
    }
    int num_edges() const {
        return static_cast<int>(edges_.size());
    }
    const Edge& edge(int e) const {
        return edges_[static_cast<std::size_t>(e)];
    }
    std::span<const Edge> edges() const {
        return edges_;
    }
    /// Edge ids incident to v, ordered by the opposite endpoint.
    std::span<const int> incident(int v) const {
        return incident_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const {
        return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }
    int other(int e, int v) const {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }
    /// Edge id joining u and v, if any.
    std::optional<int> find_edge(int u, int v) const;

    bool weighted() const {
        return weights_.has_value();
    }
    /// 1 for unweighted graphs.
    double weight(int e) const {
        return weights_ ? (*weights_)[static_cast<std::size_t>(e)] : 1.0;
    }

   private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<double>> weights_;
    std::vector<std::vector<int>> incident_;
};

/// Parses the edge-list format: header "n m", then m lines "u v [w]";
/// '#' starts a comment. Weights may be decimals or fractions "p/q". Either
/// all edges carry a weight or none do.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& graph);

struct Girth {
    ExtCount length = ExtCount::infinite();
    /// Vertices of a shortest cycle in traversal order (empty for forests).
    std::vector<int> witness;
};

/// Exact girth by a breadth-first search from every vertex.
Girth girth(const Graph& graph);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& graph);

struct SpanningForest {
    std::vector<int> parent;       // -1 at roots
    std::vector<int> parent_edge;  // -1 at roots
    std::vector<int> depth;
    std::vector<int> root;         // root of each vertex's component
    std::vector<int> roots;        // one per component, increasing
    std::vector<int> order;        // BFS visiting order
    std::vector<int> tree_edges;   // sorted
    std::vector<int> non_tree_edges;  // sorted
};

/// BFS forest rooted at the smallest vertex of each component.
SpanningForest spanning_forest(const Graph& graph);

/// m - n + #components.
int cyclomatic(const Graph& graph);

/// Tree path between two vertices of the same tree, as edge ids.
std::vector<int> tree_path(const SpanningForest& forest, int a, int b);

/// One cycle per non-tree edge, in non-tree edge order.
std::vector<EdgeVector> fundamental_cycles(const Graph& graph, const SpanningForest& forest);

}  // namespace dqimc

#endif

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

#include "dqimc/tjoin.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace dqimc {

Matching min_weight_perfect_matching(const std::vector<std::vector<std::int64_t>>& dist, int max_nodes) {
    const int size = static_cast<int>(dist.size());
    if (size % 2) {
        throw std::invalid_argument("perfect matching needs an even node count");
    }
    if (size > max_nodes) {
        throw BudgetExceeded("tset", "matching on " + std::to_string(size) + " nodes exceeds the budget of " +
                                         std::to_string(max_nodes));
    }
    for (const auto& row : dist) {
        if (static_cast<int>(row.size()) != size) {
            throw std::invalid_argument("distance matrix must be square");
        }
    }
    Matching out;
    if (size == 0) {
        return out;
    }
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    const std::uint32_t full = (std::uint32_t{1} << size) - 1;
    // best[mask]: cheapest perfect matching of the node set `mask`.
    std::vector<std::int64_t> best(std::size_t{full} + 1, kInf);
    best[0] = 0;
    auto cost = [&](int a, int b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) % 2) {
            continue;
        }
        int i = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(std::uint32_t{1} << i);
        std::int64_t b = kInf;
        for (std::uint32_t r = rest; r; r &= r - 1) {
            int j = std::countr_zero(r);
            std::int64_t sub = best[rest & ~(std::uint32_t{1} << j)];
            if (sub < kInf) {
                b = std::min(b, cost(i, j) + sub);
            }
        }
        best[mask] = b;
    }
    out.weight = best[full];
    for (std::uint32_t mask = full; mask;) {
        int i = std::countr_zero(mask);
        std::uint32_t rest = mask & ~(std::uint32_t{1} << i);
        for (std::uint32_t r = rest; r; r &= r - 1) {
            int j = std::countr_zero(r);
            std::uint32_t after = rest & ~(std::uint32_t{1} << j);
            if (best[after] < kInf && cost(i, j) + best[after] == best[mask]) {
                out.pairs.push_back({i, j});
                mask = after;
                break;
            }
        }
    }
    return out;
}

JoinResult min_t_join(const Graph& graph, const TSet& t, const Budgets& budgets) {
    const auto n = static_cast<std::size_t>(graph.num_vertices());
    if (t.size() != n) {
        throw std::invalid_argument("T-set length does not match vertex count");
    }
    const auto terminals = t.ones();
    JoinResult out{EdgeVector(static_cast<std::size_t>(graph.num_edges())), 0};
    if (terminals.empty()) {
        return out;
    }

    const SpanningForest forest = spanning_forest(graph);
    std::vector<int> parity(n, 0);
    for (std::size_t v : terminals) {
        parity[static_cast<std::size_t>(forest.root[v])] ^= 1;
    }
    for (int r : forest.roots) {
        if (parity[static_cast<std::size_t>(r)]) {
            throw Infeasible("component of vertex " + std::to_string(r) + " holds an odd number of T-vertices");
        }
    }
    if (static_cast<int>(terminals.size()) > budgets.max_tset) {
        throw BudgetExceeded("tset", "|T| = " + std::to_string(terminals.size()) + " exceeds the budget of " +
                                         std::to_string(budgets.max_tset));
    }

    // One BFS tree per terminal; neighbors are scanned in increasing id, so
    // the recorded shortest paths are the lexicographically first ones.
    const std::size_t k = terminals.size();
    std::vector<std::vector<int>> parent_edge(k, std::vector<int>(n, -1));
    std::vector<std::vector<std::int64_t>> dist(k, std::vector<std::int64_t>(k));
    constexpr std::int64_t kFar = std::int64_t{1} << 40;
    std::vector<int> depth(n), queue;
    for (std::size_t a = 0; a < k; ++a) {
        std::fill(depth.begin(), depth.end(), -1);
        queue.assign(1, static_cast<int>(terminals[a]));
        depth[terminals[a]] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int e : graph.incident(x)) {
                int y = graph.other(e, x);
                if (depth[static_cast<std::size_t>(y)] < 0) {
                    depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                    parent_edge[a][static_cast<std::size_t>(y)] = e;
                    queue.push_back(y);
                }
            }
        }
        for (std::size_t b = 0; b < k; ++b) {
            int d = depth[terminals[b]];
            dist[a][b] = d < 0 ? kFar : d;
        }
    }

    Matching match = min_weight_perfect_matching(dist, budgets.max_tset);
    for (auto [a, b] : match.pairs) {
        int v = static_cast<int>(terminals[static_cast<std::size_t>(b)]);
        const int src = static_cast<int>(terminals[static_cast<std::size_t>(a)]);
        while (v != src) {
            int e = parent_edge[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)];
            out.edges.flip(static_cast<std::size_t>(e));
            v = graph.other(e, v);
        }
    }
    out.size = out.edges.popcount();
    return out;
}

std::optional<EdgeVector> decode_parity(const Graph& graph, int l, const VertexVector& alpha, const Budgets& budgets) {
    if (l < 0) {
        throw std::invalid_argument("decode_parity needs l >= 0");
    }
    if (alpha.popcount() > 2 * static_cast<std::size_t>(l)) {
        return std::nullopt;  // a join covers at most two T-vertices per edge
    }
    try {
        JoinResult join = min_t_join(graph, alpha, budgets);
        if (join.size > static_cast<std::size_t>(l)) {
            return std::nullopt;
        }
        return std::move(join.edges);
    } catch (const Infeasible&) {
        return std::nullopt;
    }
}

}  // namespace dqimc

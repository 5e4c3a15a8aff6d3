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

#include "dqimc/tree_partition.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dqimc {

namespace {

struct RootedTree {
    std::vector<int> parent;  // -1 at the root and outside the component
    std::vector<int> depth;
    std::vector<int> order;   // BFS order
};

RootedTree bfs_tree(const Graph& graph, int root) {
    const auto n = static_cast<std::size_t>(graph.num_vertices());
    RootedTree t{std::vector<int>(n, -1), std::vector<int>(n, -1), {root}};
    t.depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        int x = t.order[head];
        for (int e : graph.incident(x)) {
            int y = graph.other(e, x);
            if (t.depth[static_cast<std::size_t>(y)] < 0) {
                t.depth[static_cast<std::size_t>(y)] = t.depth[static_cast<std::size_t>(x)] + 1;
                t.parent[static_cast<std::size_t>(y)] = x;
                t.order.push_back(y);
            }
        }
    }
    return t;
}

// Peels one component's BFS tree; returns the vertex sets in peel order.
std::vector<std::vector<int>> peel(const Graph& graph, int root, int d) {
    const RootedTree t = bfs_tree(graph, root);
    const auto n = static_cast<std::size_t>(graph.num_vertices());
    std::vector<char> alive(n, 0);
    for (int v : t.order) {
        alive[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<std::vector<int>> parts;
    std::size_t remaining = t.order.size();
    std::vector<char> in_sub(n, 0);
    while (remaining > 0) {
        // Deepest alive vertex (smallest id on ties) is a leaf of what is left.
        int u = -1;
        for (int v : t.order) {
            if (!alive[static_cast<std::size_t>(v)]) {
                continue;
            }
            if (u < 0 || t.depth[static_cast<std::size_t>(v)] > t.depth[static_cast<std::size_t>(u)] ||
                (t.depth[static_cast<std::size_t>(v)] == t.depth[static_cast<std::size_t>(u)] && v < u)) {
                u = v;
            }
        }
        if (t.depth[static_cast<std::size_t>(u)] < d) {
            break;
        }
        int top = u;
        for (int step = 0; step < d; ++step) {
            top = t.parent[static_cast<std::size_t>(top)];
        }
        // Alive descendants of `top`; BFS order lists parents first.
        std::vector<int> part;
        in_sub[static_cast<std::size_t>(top)] = 1;
        for (int v : t.order) {
            auto vi = static_cast<std::size_t>(v);
            if (!alive[vi]) {
                continue;
            }
            if (v != top && !(t.parent[vi] >= 0 && in_sub[static_cast<std::size_t>(t.parent[vi])])) {
                continue;
            }
            in_sub[vi] = 1;
            part.push_back(v);
        }
        for (int v : part) {
            alive[static_cast<std::size_t>(v)] = 0;
            in_sub[static_cast<std::size_t>(v)] = 0;
        }
        remaining -= part.size();
        parts.push_back(std::move(part));
    }
    if (remaining > 0) {
        std::vector<int> rest;
        for (int v : t.order) {
            if (alive[static_cast<std::size_t>(v)]) {
                rest.push_back(v);
            }
        }
        parts.push_back(std::move(rest));
    }
    return parts;
}

void fill_edges(const Graph& graph, TreePartition& p) {
    std::vector<int> part_of(static_cast<std::size_t>(graph.num_vertices()), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        std::sort(p.parts[i].begin(), p.parts[i].end());
        for (int v : p.parts[i]) {
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    p.part_edges.assign(p.parts.size(), {});
    p.cross_edges = 0;
    for (int e = 0; e < graph.num_edges(); ++e) {
        int a = part_of[static_cast<std::size_t>(graph.edge(e).u)];
        int b = part_of[static_cast<std::size_t>(graph.edge(e).v)];
        if (a == b) {
            p.part_edges[static_cast<std::size_t>(a)].push_back(e);
        } else {
            ++p.cross_edges;
        }
    }
}

TreePartition partition_impl(const Graph& graph, const std::vector<int>* fixed_roots) {
    TreePartition p;
    p.girth = girth(graph).length;
    const auto comps = components(graph);
    if (fixed_roots && fixed_roots->size() != comps.size()) {
        throw std::invalid_argument("tree_partition needs one root per component");
    }
    if (p.girth.is_finite() && p.girth.value() < 7) {
        p.degenerate = true;
        p.depth = ExtCount(p.girth.value() >= 3 ? (p.girth.value() - 3) / 4 : 0);
        for (int v = 0; v < graph.num_vertices(); ++v) {
            p.parts.push_back({v});
            p.roots.push_back(v);
        }
        fill_edges(graph, p);
        return p;
    }
    // On a forest no peeling is needed: each tree is a part.
    const int d = p.girth.is_finite() ? static_cast<int>((p.girth.value() - 3) / 4) : graph.num_vertices() + 1;
    if (p.girth.is_finite()) {
        p.depth = ExtCount(static_cast<std::size_t>(d));
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::vector<std::vector<int>> best;
        int best_root = -1;
        if (fixed_roots) {
            best_root = (*fixed_roots)[c];
            best = peel(graph, best_root, d);
        } else if (p.girth.is_infinite()) {
            best_root = comps[c].front();
            best = peel(graph, best_root, d);
        } else {
            for (int r : comps[c]) {
                auto parts = peel(graph, r, d);
                if (best_root < 0 || parts.size() < best.size()) {
                    best = std::move(parts);
                    best_root = r;
                }
            }
        }
        p.roots.push_back(best_root);
        for (auto& part : best) {
            p.parts.push_back(std::move(part));
        }
    }
    fill_edges(graph, p);
    verify_tree_partition(graph, p);
    return p;
}

}  // namespace

TreePartition tree_partition(const Graph& graph) {
    return partition_impl(graph, nullptr);
}

TreePartition tree_partition(const Graph& graph, const std::vector<int>& roots) {
    return partition_impl(graph, &roots);
}

void verify_tree_partition(const Graph& graph, const TreePartition& partition) {
    const auto n = static_cast<std::size_t>(graph.num_vertices());
    std::vector<int> part_of(n, -1);
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
        for (int v : partition.parts[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || part_of[static_cast<std::size_t>(v)] >= 0) {
                throw std::logic_error("tree partition: vertex " + std::to_string(v) + " covered twice or invalid");
            }
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (part_of[v] < 0) {
            throw std::logic_error("tree partition: vertex " + std::to_string(v) + " not covered");
        }
    }
    std::vector<std::size_t> inner(partition.parts.size(), 0);
    std::map<std::pair<int, int>, int> between;
    std::vector<int> dsu(n);
    for (std::size_t v = 0; v < n; ++v) {
        dsu[v] = static_cast<int>(v);
    }
    auto find = [&](int x) {
        while (dsu[static_cast<std::size_t>(x)] != x) {
            x = dsu[static_cast<std::size_t>(x)] = dsu[static_cast<std::size_t>(dsu[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    for (const Edge& e : graph.edges()) {
        int a = part_of[static_cast<std::size_t>(e.u)], b = part_of[static_cast<std::size_t>(e.v)];
        if (a == b) {
            ++inner[static_cast<std::size_t>(a)];
            int ru = find(e.u), rv = find(e.v);
            if (ru == rv) {
                throw std::logic_error("tree partition: part " + std::to_string(a) + " contains a cycle");
            }
            dsu[static_cast<std::size_t>(ru)] = rv;
        } else if (++between[{std::min(a, b), std::max(a, b)}] > 1) {
            throw std::logic_error("tree partition: parts " + std::to_string(a) + " and " + std::to_string(b) +
                                   " share more than one edge");
        }
    }
    for (std::size_t i = 0; i < partition.parts.size(); ++i) {
        if (inner[i] + 1 != partition.parts[i].size()) {
            throw std::logic_error("tree partition: part " + std::to_string(i) + " is not connected");
        }
    }
}

MuCertificate mu_certificate(const Graph& graph) {
    MuCertificate c;
    const SpanningForest forest = spanning_forest(graph);
    const auto comps = components(graph);
    std::vector<int> comp_of(static_cast<std::size_t>(graph.num_vertices()));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (int v : comps[i]) {
            comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    c.mu_per_component.assign(comps.size(), 0);
    std::vector<int> edges_in(comps.size(), 0);
    for (const Edge& e : graph.edges()) {
        ++edges_in[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(e.u)])];
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        c.mu_per_component[i] = edges_in[i] - static_cast<int>(comps[i].size()) + 1;
    }
    c.mu = cyclomatic(graph);
    c.girth = girth(graph).length;
    c.non_tree_edges = static_cast<int>(forest.non_tree_edges.size());
    c.bound_check = c.non_tree_edges == c.mu;
    return c;
}

}  // namespace dqimc

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

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#ifndef DQIMC_TESTS_ORACLES_H
#define DQIMC_TESTS_ORACLES_H

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "dqimc/generators.h"
#include "dqimc/graph.h"

namespace oracle {

using dqimc::Graph;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.num_vertices()));
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
}

/// Length of a shortest simple cycle by enumerating every simple cycle from
/// its smallest vertex; 0 when acyclic.
inline int shortest_cycle_by_enumeration(const Graph& g) {
    auto adj = adjacency(g);
    int best = 0;
    std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
    std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == start && len >= 3) {
                if (best == 0 || len < best) {
                    best = len;
                }
            } else if (w > start && !on[static_cast<std::size_t>(w)]) {
                on[static_cast<std::size_t>(w)] = 1;
                dfs(start, w, len + 1);
                on[static_cast<std::size_t>(w)] = 0;
            }
        }
    };
    for (int s = 0; s < g.num_vertices(); ++s) {
        on[static_cast<std::size_t>(s)] = 1;
        dfs(s, s, 1);
        on[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

/// True iff `cycle` lists distinct vertices forming a closed walk of edges.
inline bool is_simple_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) {
        return false;
    }
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
            return false;
        }
    }
    return true;
}

/// Vertex parity mask of an edge subset given as a bitmask (n <= 64).
inline std::uint64_t parity_of_mask(const Graph& g, std::uint64_t edges) {
    std::uint64_t alpha = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        if ((edges >> e) & 1) {
            alpha ^= std::uint64_t{1} << g.edge(e).u;
            alpha ^= std::uint64_t{1} << g.edge(e).v;
        }
    }
    return alpha;
}

/// Smallest and second smallest subset sizes per parity vector, visiting all
/// 2^m edge subsets in Gray-code order. Entries are INT_MAX when absent.
/// Needs n <= 24.
inline std::vector<std::pair<int, int>> weights_by_parity(const Graph& g) {
    constexpr int none = std::numeric_limits<int>::max();
    std::vector<std::pair<int, int>> w(std::size_t{1} << g.num_vertices(), {none, none});
    std::vector<std::uint64_t> masks;
    for (const auto& e : g.edges()) {
        masks.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    }
    std::uint64_t alpha = 0, subset = 0;
    for (std::uint64_t step = 0; step < (std::uint64_t{1} << g.num_edges()); ++step) {
        if (step > 0) {
            int bit = std::countr_zero(step);
            subset ^= std::uint64_t{1} << bit;
            alpha ^= masks[static_cast<std::size_t>(bit)];
        }
        int k = std::popcount(subset);
        auto& [w1, w2] = w[alpha];
        if (k < w1) {
            w2 = w1;
            w1 = k;
        } else if (k < w2) {
            w2 = k;
        }
    }
    return w;
}

/// Largest l for which no two distinct subsets of size <= l share a parity
/// vector, by enumerating all 2^m subsets. Returns -1 for "every l" (no
/// collision at all).
inline int brute_injectivity_limit(const Graph& g) {
    int limit = std::numeric_limits<int>::max();
    for (const auto& ws : weights_by_parity(g)) {
        limit = std::min(limit, ws.second);
    }
    return limit == std::numeric_limits<int>::max() ? -1 : limit - 1;
}

/// Minimum number of edges among subsets whose parity vector is t, or -1.
inline int brute_min_t_join(const Graph& g, std::uint64_t t) {
    int w = weights_by_parity(g)[t].first;
    return w == std::numeric_limits<int>::max() ? -1 : w;
}

/// Minimum perfect matching weight by recursion over all pairings.
inline std::int64_t brute_matching(const std::vector<std::vector<std::int64_t>>& d) {
    std::vector<char> used(d.size(), 0);
    std::function<std::int64_t()> rec = [&]() -> std::int64_t {
        std::size_t i = 0;
        while (i < d.size() && used[i]) {
            ++i;
        }
        if (i == d.size()) {
            return 0;
        }
        used[i] = 1;
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (!used[j]) {
                used[j] = 1;
                best = std::min(best, d[i][j] + rec());
                used[j] = 0;
            }
        }
        used[i] = 0;
        return best;
    };
    return rec();
}

inline int cut_of(const Graph& g, std::uint64_t z) {
    int c = 0;
    for (const auto& e : g.edges()) {
        c += ((z >> e.u) ^ (z >> e.v)) & 1;
    }
    return c;
}

/// counts[j] over all 2^n assignments, no symmetry used.
inline std::vector<std::uint64_t> brute_histogram(const Graph& g) {
    std::vector<std::uint64_t> h(static_cast<std::size_t>(g.num_edges() + 1), 0);
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << g.num_vertices()); ++z) {
        ++h[static_cast<std::size_t>(cut_of(g, z))];
    }
    return h;
}

/// Maximum weighted cut over all 2^n assignments.
inline double brute_max_cut(const Graph& g) {
    double best = 0;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << g.num_vertices()); ++z) {
        double c = 0;
        for (int e = 0; e < g.num_edges(); ++e) {
            if (((z >> g.edge(e).u) ^ (z >> g.edge(e).v)) & 1) {
                c += g.weight(e);
            }
        }
        best = std::max(best, c);
    }
    return best;
}

/// Elementary symmetric polynomials e_0..e_l of the given values.
inline std::vector<double> elementary_symmetric(const std::vector<double>& ys, int l) {
    std::vector<double> e(static_cast<std::size_t>(l + 1), 0.0);
    e[0] = 1;
    for (double y : ys) {
        for (int k = l; k >= 1; --k) {
            e[static_cast<std::size_t>(k)] += y * e[static_cast<std::size_t>(k - 1)];
        }
    }
    return e;
}

/// E[h(z)] for z ~ q(z)^2, q(z) = sum_k mu_k e_k(y(z)), y_ij = z_i z_j,
/// evaluated assignment by assignment.
inline double brute_dqi_expectation(const Graph& g, const std::vector<double>& mu) {
    const int l = static_cast<int>(mu.size()) - 1;
    long double num = 0, den = 0;
    std::vector<double> ys(static_cast<std::size_t>(g.num_edges()));
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << g.num_vertices()); ++z) {
        for (int e = 0; e < g.num_edges(); ++e) {
            ys[static_cast<std::size_t>(e)] = (((z >> g.edge(e).u) ^ (z >> g.edge(e).v)) & 1) ? -1.0 : 1.0;
        }
        auto es = elementary_symmetric(ys, l);
        long double q = 0;
        for (int k = 0; k <= l; ++k) {
            q += static_cast<long double>(mu[static_cast<std::size_t>(k)]) * es[static_cast<std::size_t>(k)];
        }
        num += q * q * cut_of(g, z);
        den += q * q;
    }
    return static_cast<double>(num / den);
}

/// Random connected graphs with 2 <= n <= max_n and random edge counts;
/// weighted graphs get weights in {0, 1/4, ..., 2}.
inline std::vector<Graph> random_connected_graphs(int count, int max_n, std::uint64_t seed, bool weighted = false) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = std::uniform_int_distribution<int>(2, max_n)(rng);
        int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
        Graph g = dqimc::random_connected(n, m, rng());
        if (weighted) {
            std::vector<double> w;
            for (int e = 0; e < g.num_edges(); ++e) {
                w.push_back(std::uniform_int_distribution<int>(0, 8)(rng) / 4.0);
            }
            g = Graph(g.num_vertices(), std::vector<dqimc::Edge>(g.edges().begin(), g.edges().end()), w);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace oracle

#endif

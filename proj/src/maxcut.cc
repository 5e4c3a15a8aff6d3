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

#include "dqimc/maxcut.h"

#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dqimc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Slack for comparing accumulated cut weights; zero when every weight is an
// integer, which keeps all sums exact.
double tie_tolerance(const Graph& graph) {
    double total = 0;
    bool integral = true;
    for (int e = 0; e < graph.num_edges(); ++e) {
        double w = graph.weight(e);
        total += w;
        integral = integral && w == std::floor(w) && w < 0x1p52;
    }
    return integral ? 0.0 : 1e-12 * total;
}

// a precedes b when, at the lowest vertex where they differ, a has side 0.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    return diff && !(a & diff & (~diff + 1));
}

MaxCutResult finish(const Graph& graph, VertexVector sides, std::string method, Clock::time_point start) {
    MaxCutResult r;
    r.value = cut_weight(graph, sides);
    r.assignment = {std::move(sides), r.value};
    r.method = std::move(method);
    r.elapsed_seconds = seconds_since(start);
    return r;
}

}  // namespace

MaxCutResult brute_force_maxcut(const Graph& graph, const Budgets& budgets) {
    const auto start = Clock::now();
    const int n = graph.num_vertices();
    if (n - 1 > budgets.assignment_log2 || n > 63) {
        throw BudgetExceeded("assignments", "brute force over 2^" + std::to_string(std::max(n - 1, 0)) +
                                                " assignments exceeds the budget 2^" +
                                                std::to_string(budgets.assignment_log2));
    }
    const double tol = tie_tolerance(graph);
    std::uint64_t z = 0, best_z = 0;
    double cut = 0, best = 0;
    const std::uint64_t states = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < states; ++i) {
        int v = std::countr_zero(i) + 1;
        for (int e : graph.incident(v)) {
            int w = graph.other(e, v);
            bool was_cut = ((z >> v) ^ (z >> w)) & 1;
            cut += was_cut ? -graph.weight(e) : graph.weight(e);
        }
        z ^= std::uint64_t{1} << v;
        if (cut > best + tol || (cut >= best - tol && lex_less(z, best_z))) {
            if (cut > best + tol) {
                best = cut;
            } else {
                best = std::max(best, cut);
            }
            best_z = z;
        }
    }
    return finish(graph, VertexVector(BitVector::from_word(static_cast<std::size_t>(n), best_z)), "brute", start);
}

MaxCutResult fpt_maxcut(const Graph& graph, const Budgets& budgets) {
    const auto start = Clock::now();
    const int n = graph.num_vertices();
    const SpanningForest forest = spanning_forest(graph);
    const int mu = static_cast<int>(forest.non_tree_edges.size());
    // Anchors: endpoints of non-tree edges that are not component roots.
    std::vector<int> anchor_index(static_cast<std::size_t>(n), -1);
    std::vector<int> anchors;
    for (int e : forest.non_tree_edges) {
        for (int v : {graph.edge(e).u, graph.edge(e).v}) {
            auto vi = static_cast<std::size_t>(v);
            if (forest.parent[vi] >= 0 && anchor_index[vi] < 0) {
                anchor_index[vi] = static_cast<int>(anchors.size());
                anchors.push_back(v);
            }
        }
    }
    // At most min(2 mu, n - 1) anchors.
    const int k = static_cast<int>(anchors.size());
    if (k > budgets.fpt_log2) {
        throw BudgetExceeded("fpt", "2^" + std::to_string(k) + " anchor assignments (mu = " + std::to_string(mu) +
                                        ") exceed the budget 2^" + std::to_string(budgets.fpt_log2));
    }
    const double tol = tie_tolerance(graph);
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();

    // side of v under anchor assignment `mask`: -1 when free.
    auto clamp = [&](int v, std::uint64_t mask) -> int {
        auto vi = static_cast<std::size_t>(v);
        if (forest.parent[vi] < 0) {
            return 0;
        }
        int a = anchor_index[vi];
        return a < 0 ? -1 : static_cast<int>((mask >> a) & 1);
    };

    std::vector<double> val0(static_cast<std::size_t>(n)), val1(static_cast<std::size_t>(n));
    double best = kNegInf;
    std::uint64_t best_mask = 0;
    const std::uint64_t masks = std::uint64_t{1} << anchors.size();
    auto run_dp = [&](std::uint64_t mask) {
        for (int v = 0; v < n; ++v) {
            int c = clamp(v, mask);
            val0[static_cast<std::size_t>(v)] = c == 1 ? kNegInf : 0.0;
            val1[static_cast<std::size_t>(v)] = c == 0 ? kNegInf : 0.0;
        }
        // Children before parents: fold each subtree into its parent.
        for (auto it = forest.order.rbegin(); it != forest.order.rend(); ++it) {
            auto c = static_cast<std::size_t>(*it);
            int p = forest.parent[c];
            if (p < 0) {
                continue;
            }
            double w = graph.weight(forest.parent_edge[c]);
            auto pi = static_cast<std::size_t>(p);
            val0[pi] += std::max(val0[c], val1[c] + w);
            val1[pi] += std::max(val0[c] + w, val1[c]);
        }
        double total = 0;
        for (int r : forest.roots) {
            total += val0[static_cast<std::size_t>(r)];
        }
        for (int e : forest.non_tree_edges) {
            if (clamp(graph.edge(e).u, mask) != clamp(graph.edge(e).v, mask)) {
                total += graph.weight(e);
            }
        }
        return total;
    };
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        double total = run_dp(mask);
        if (total > best + tol) {
            best = total;
            best_mask = mask;
        }
    }

    // Recover sides top-down for the winning anchor assignment, preferring
    // side 0 on ties.
    run_dp(best_mask);
    VertexVector sides(static_cast<std::size_t>(n));
    for (int v : forest.order) {
        auto vi = static_cast<std::size_t>(v);
        int p = forest.parent[vi];
        if (p < 0) {
            continue;
        }
        int c = clamp(v, best_mask);
        if (c >= 0) {
            sides.set(vi, c == 1);
            continue;
        }
        bool ps = sides.get(static_cast<std::size_t>(p));
        double w = graph.weight(forest.parent_edge[vi]);
        double stay0 = val0[vi] + (ps ? w : 0.0);
        double go1 = val1[vi] + (ps ? 0.0 : w);
        sides.set(vi, go1 > stay0 + tol);
    }
    return finish(graph, std::move(sides), "fpt", start);
}

MaxCutResult spanning_tree_cut(const Graph& graph) {
    const auto start = Clock::now();
    const SpanningForest forest = spanning_forest(graph);
    VertexVector sides(static_cast<std::size_t>(graph.num_vertices()));
    for (int v = 0; v < graph.num_vertices(); ++v) {
        sides.set(static_cast<std::size_t>(v), forest.depth[static_cast<std::size_t>(v)] % 2);
    }
    return finish(graph, std::move(sides), "tree", start);
}

}  // namespace dqimc

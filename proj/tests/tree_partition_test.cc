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

#include "doctest.h"
#include "dqimc/generators.h"
#include "dqimc/tree_partition.h"
#include "oracles.h"

using namespace dqimc;

namespace {

void check_invariants(const Graph& g, const TreePartition& p) {
    CHECK_NOTHROW(verify_tree_partition(g, p));
    std::vector<int> owner(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (int v : p.parts[i]) {
            CHECK(owner[static_cast<std::size_t>(v)] == -1);
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    CHECK(std::none_of(owner.begin(), owner.end(), [](int o) { return o < 0; }));
    int inside = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        // Each part induces a tree.
        CHECK(p.part_edges[i].size() + 1 == p.parts[i].size());
        for (int e : p.part_edges[i]) {
            CHECK(owner[static_cast<std::size_t>(g.edge(e).u)] == static_cast<int>(i));
            CHECK(owner[static_cast<std::size_t>(g.edge(e).v)] == static_cast<int>(i));
        }
        inside += static_cast<int>(p.part_edges[i].size());
    }
    CHECK(inside + p.cross_edges == g.num_edges());
}

}  // namespace

TEST_CASE("tree partition of cycles and theta graphs") {
    for (int n : {7, 8, 20, 51, 200}) {
        auto p = tree_partition(cycle_graph(n));
        CHECK_FALSE(p.degenerate);
        CHECK(p.parts.size() <= 5);
        CHECK(p.depth == ExtCount(static_cast<std::size_t>((n - 3) / 4)));
        check_invariants(cycle_graph(n), p);
    }
    for (int a : {4, 5, 9, 30}) {
        Graph g = theta_graph(a, a, a);
        auto p = tree_partition(g);
        CHECK(p.parts.size() <= 6);
        check_invariants(g, p);
    }
    CHECK(tree_partition(petersen_graph()).degenerate);
}

TEST_CASE("tree partition of forests and short girth") {
    auto path = tree_partition(path_graph(9));
    CHECK(path.parts.size() == 1);
    CHECK(path.depth.is_infinite());
    check_invariants(path_graph(9), path);

    const Graph forest(5, {{0, 1}, {2, 3}});
    auto f = tree_partition(forest);
    CHECK(f.parts.size() == 3);
    check_invariants(forest, f);

    auto c6 = tree_partition(cycle_graph(6));
    CHECK(c6.degenerate);
    CHECK(c6.parts.size() == 6);
    check_invariants(cycle_graph(6), c6);
}

TEST_CASE("tree partition invariants on random graphs") {
    for (const auto& g : oracle::random_connected_graphs(100, 30, 71)) {
        check_invariants(g, tree_partition(g));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = tree_plus_chords(60, 2, seed);
        check_invariants(g, tree_partition(g));
    }
}

TEST_CASE("fixed roots") {
    Graph g = cycle_graph(12);
    auto p = tree_partition(g, {4});
    CHECK(p.roots == std::vector<int>{4});
    check_invariants(g, p);
    CHECK_THROWS(tree_partition(g, {}));
}

TEST_CASE("cyclomatic certificate") {
    auto c = mu_certificate(petersen_graph());
    CHECK(c.mu == 6);
    CHECK(c.non_tree_edges == 6);
    CHECK(c.bound_check);
    CHECK(c.girth == ExtCount(5));

    const Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto t = mu_certificate(two);
    CHECK(t.mu == 1);
    CHECK(t.mu_per_component == std::vector<int>{1, 0, 0});
    for (const auto& g : oracle::random_connected_graphs(50, 10, 81)) {
        CHECK(mu_certificate(g).mu == g.num_edges() - g.num_vertices() + 1);
    }
}

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

#include <sstream>

#include "doctest.h"
#include "dqimc/generators.h"
#include "dqimc/graph.h"
#include "dqimc/parity.h"
#include "oracles.h"

using namespace dqimc;

TEST_CASE("girth of small families") {
    Girth c6 = girth(cycle_graph(6));
    CHECK(c6.length == ExtCount(6));
    CHECK(oracle::is_simple_cycle(cycle_graph(6), c6.witness));
    CHECK(c6.witness.size() == 6);

    Graph p = petersen_graph();
    Girth pg = girth(p);
    CHECK(oracle::shortest_cycle_by_enumeration(p) == 5);
    CHECK(pg.length == ExtCount(5));
    CHECK(oracle::is_simple_cycle(p, pg.witness));

    CHECK(girth(path_graph(7)).length.is_infinite());
    CHECK(girth(path_graph(7)).witness.empty());
    CHECK(girth(tree_plus_chords(30, 0, 5)).length.is_infinite());
    CHECK(girth(Graph(4, {})).length.is_infinite());
}

TEST_CASE("girth matches simple-cycle enumeration on random graphs") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        int m = std::uniform_int_distribution<int>(0, n * (n - 1) / 2)(rng);
        // Random simple graph, not necessarily connected.
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                pairs.push_back({u, v});
            }
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            edges.push_back({pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second});
        }
        Graph g(n, edges);
        Girth gg = girth(g);
        int expect = oracle::shortest_cycle_by_enumeration(g);
        if (expect == 0) {
            CHECK(gg.length.is_infinite());
        } else {
            REQUIRE(gg.length.is_finite());
            CHECK(gg.length.value() == static_cast<std::size_t>(expect));
            CHECK(oracle::is_simple_cycle(g, gg.witness));
            CHECK(gg.witness.size() == gg.length.value());
        }
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("components ordered by smallest vertex") {
    auto c = components(cycle_graph(6));
    REQUIRE(c.size() == 1);
    CHECK(c[0].size() == 6);

    Graph two(6, {{3, 4}, {4, 5}, {3, 5}, {0, 1}, {1, 2}, {0, 2}});
    auto t = components(two);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::vector<int>{0, 1, 2});
    CHECK(t[1] == std::vector<int>{3, 4, 5});

    auto s = components(Graph(3, {}));
    CHECK(s == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("spanning forest and cyclomatic number") {
    auto f6 = spanning_forest(cycle_graph(6));
    CHECK(f6.tree_edges.size() == 5);
    CHECK(f6.non_tree_edges.size() == 1);
    CHECK(cyclomatic(cycle_graph(6)) == 1);

    auto k4 = spanning_forest(complete_graph(4));
    CHECK(k4.tree_edges.size() == 3);
    CHECK(k4.non_tree_edges.size() == 3);

    Graph tree = tree_plus_chords(25, 0, 3);
    auto ft = spanning_forest(tree);
    CHECK(ft.tree_edges.size() == 24);
    CHECK(ft.non_tree_edges.empty());
    CHECK(cyclomatic(tree) == 0);

    CHECK(cyclomatic(petersen_graph()) == 6);
    for (int n : {3, 10, 57}) {
        CHECK(cyclomatic(cycle_graph(n)) == 1);
    }

    for (const Graph& g : oracle::random_connected_graphs(50, 9, 4)) {
        auto f = spanning_forest(g);
        CHECK(static_cast<int>(f.non_tree_edges.size()) == cyclomatic(g));
        CHECK(static_cast<int>(f.tree_edges.size()) ==
              g.num_vertices() - static_cast<int>(components(g).size()));
        CHECK(f.tree_edges.size() + f.non_tree_edges.size() == static_cast<std::size_t>(g.num_edges()));
    }
}

TEST_CASE("fundamental cycles") {
    Graph c6 = cycle_graph(6);
    auto cyc6 = fundamental_cycles(c6, spanning_forest(c6));
    REQUIRE(cyc6.size() == 1);
    CHECK(cyc6[0].popcount() == 6);

    // BFS from 0 in K4 is the star at 0; every cycle is a triangle through 0.
    Graph k4 = complete_graph(4);
    auto f = spanning_forest(k4);
    CHECK(f.tree_edges == std::vector<int>{0, 1, 2});
    auto cyc = fundamental_cycles(k4, f);
    REQUIRE(cyc.size() == 3);
    for (const auto& c : cyc) {
        CHECK(c.popcount() == 3);
        auto ones = c.ones();
        int through_zero = 0;
        for (auto e : ones) {
            through_zero += k4.edge(static_cast<int>(e)).u == 0;
        }
        CHECK(through_zero == 2);
        CHECK(is_cycle_vector(k4, c));
    }

    Graph tree = path_graph(5);
    CHECK(fundamental_cycles(tree, spanning_forest(tree)).empty());

    for (const Graph& g : oracle::random_connected_graphs(40, 9, 8)) {
        auto cycles = fundamental_cycles(g, spanning_forest(g));
        CHECK(static_cast<int>(cycles.size()) == cyclomatic(g));
        for (const auto& c : cycles) {
            CHECK(is_cycle_vector(g, c));
        }
    }
}

TEST_CASE("generators") {
    Graph theta = theta_graph(3, 3, 4);
    CHECK(theta.num_vertices() == 9);
    CHECK(theta.num_edges() == 10);
    CHECK(girth(theta).length == ExtCount(6));
    CHECK(cyclomatic(theta) == 2);

    Graph p = petersen_graph();
    CHECK(p.num_vertices() == 10);
    CHECK(p.num_edges() == 15);
    for (int v = 0; v < 10; ++v) {
        CHECK(p.degree(v) == 3);
    }

    CHECK(cyclomatic(tree_plus_chords(40, 5, 9)) == 5);
    CHECK(girth(cycle_graph(6)).length == ExtCount(6));

    auto a = random_connected(12, 20, 77), b = random_connected(12, 20, 77);
    CHECK(std::vector<Edge>(a.edges().begin(), a.edges().end()) ==
          std::vector<Edge>(b.edges().begin(), b.edges().end()));
    CHECK(components(a).size() == 1);

    CHECK_THROWS_AS(random_connected(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_connected(4, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(theta_graph(1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::parse("hypercube:3"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSpec::parse("theta:3,3"), std::invalid_argument);
    CHECK(GeneratorSpec::parse("theta:3,3,4").str() == "theta:3,3,4");
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}, std::vector<double>{-1.0}), std::invalid_argument);
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.edge(0) == Edge{0, 2});
    for (int v = 0; v < 3; ++v) {
        for (int e : g.incident(v)) {
            CHECK((g.edge(e).u == v || g.edge(e).v == v));
        }
    }
}

TEST_CASE("edge-list format") {
    std::istringstream in("# triangle with weights\n3 3\n0 1 1\n1 2 2  # heavy\n\n0 2 3/4\n");
    Graph g = read_edge_list(in);
    CHECK(g.num_vertices() == 3);
    CHECK(g.weighted());
    CHECK(g.weight(2) == doctest::Approx(0.75));

    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "3 3\n0 1 1\n1 2 2\n0 2 0.75\n");
    std::istringstream again(out.str());
    Graph h = read_edge_list(again);
    CHECK(h.weight(2) == 0.75);

    const Graph pet = petersen_graph();
    std::ostringstream plain;
    write_edge_list(plain, pet);
    std::istringstream back(plain.str());
    Graph p = read_edge_list(back);
    CHECK(std::vector<Edge>(p.edges().begin(), p.edges().end()) ==
          std::vector<Edge>(pet.edges().begin(), pet.edges().end()));

    auto bad = [](const char* text) {
        std::istringstream s(text);
        return read_edge_list(s);
    };
    CHECK_THROWS_AS(bad("3 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(bad("3 2\n0 1\n1 2 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(bad("3 1\n0 9\n"), std::invalid_argument);
    CHECK_THROWS_AS(bad("3 1\n0 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(bad("# nothing\n"), std::invalid_argument);
    CHECK_THROWS_AS(bad("2 1\n0 1 -2\n"), std::invalid_argument);
}

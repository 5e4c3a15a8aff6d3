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

#include <random>

#include "doctest.h"
#include "dqimc/generators.h"
#include "dqimc/parity.h"
#include "oracles.h"

using namespace dqimc;

namespace {

EdgeVector edges_of(const Graph& g, std::initializer_list<int> ids) {
    EdgeVector b(static_cast<std::size_t>(g.num_edges()));
    for (int e : ids) {
        b.set(static_cast<std::size_t>(e));
    }
    return b;
}

EdgeVector random_edges(const Graph& g, std::mt19937_64& rng) {
    EdgeVector b(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) {
        b.set(static_cast<std::size_t>(e), rng() & 1);
    }
    return b;
}

}  // namespace

TEST_CASE("parity map examples") {
    Graph c3 = cycle_graph(3);
    CHECK(parity_map(c3, edges_of(c3, {0, 1, 2})).none());
    CHECK(parity_map(c3, edges_of(c3, {})).none());
    VertexVector single = parity_map(c3, edges_of(c3, {1}));
    CHECK(single.ones() == std::vector<std::size_t>{1, 2});
    CHECK(single.popcount() == 2);

    CHECK(is_cycle_vector(c3, edges_of(c3, {0, 1, 2})));
    CHECK_FALSE(is_cycle_vector(c3, edges_of(c3, {0})));

    Graph k4 = complete_graph(4);
    auto cycles = fundamental_cycles(k4, spanning_forest(k4));
    CHECK(is_cycle_vector(k4, cycles[0] ^ cycles[1]));
}

TEST_CASE("incidence matrix rows") {
    Graph p = petersen_graph();
    IncidenceMatrix b(p);
    CHECK(b.rows() == 15);
    CHECK(b.cols() == 10);
    for (std::size_t e = 0; e < b.rows(); ++e) {
        int ones = 0;
        for (std::size_t v = 0; v < b.cols(); ++v) {
            ones += b.at(e, v);
        }
        CHECK(ones == 2);
    }
}

TEST_CASE("parity map is linear and respects component handshake") {
    std::mt19937_64 rng(5);
    Graph two(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}, {3, 5}});
    for (const Graph& g : {petersen_graph(), theta_graph(3, 4, 5), two, random_connected(12, 25, 3)}) {
        auto comps = components(g);
        for (int trial = 0; trial < 100; ++trial) {
            EdgeVector a = random_edges(g, rng), b = random_edges(g, rng);
            CHECK(parity_map(g, a ^ b) == (parity_map(g, a) ^ parity_map(g, b)));
            VertexVector alpha = parity_map(g, a);
            for (const auto& comp : comps) {
                int weight = 0;
                for (int v : comp) {
                    weight += alpha.get(static_cast<std::size_t>(v));
                }
                CHECK(weight % 2 == 0);
            }
        }
    }
}

TEST_CASE("injectivity radius") {
    CHECK(injectivity_radius(cycle_graph(3)) == ExtCount(1));
    CHECK(injectivity_radius(petersen_graph()) == ExtCount(2));
    CHECK(injectivity_radius(cycle_graph(6)) == ExtCount(2));
    CHECK(injectivity_radius(path_graph(6)).is_infinite());
    CHECK(oracle::brute_injectivity_limit(path_graph(6)) == -1);
    CHECK(oracle::brute_injectivity_limit(petersen_graph()) == 2);
}

TEST_CASE("hex serialization") {
    BitVector b(10);
    b.set(0);
    b.set(9);
    CHECK(b.to_hex() == "201");
    CHECK(BitVector::from_hex(10, "0x201") == b);
    CHECK(BitVector::from_hex(10, "201") == b);
    CHECK(BitVector::from_hex(70, "1").ones() == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(BitVector::from_hex(3, "8"), std::invalid_argument);
    CHECK_THROWS_AS(BitVector::from_hex(8, "g1"), std::invalid_argument);
    CHECK(BitVector(0).to_hex().empty());

    std::mt19937_64 rng(1);
    for (std::size_t size : {1u, 7u, 64u, 65u, 130u}) {
        BitVector v(size);
        for (std::size_t i = 0; i < size; ++i) {
            v.set(i, rng() & 1);
        }
        CHECK(BitVector::from_hex(size, v.to_hex()) == v);
    }
}

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

#ifndef DQIMC_GENERATORS_H
#define DQIMC_GENERATORS_H

#include <cstdint>
#include <string>
#include <vector>

#include "dqimc/graph.h"

namespace dqimc {

/// Named graph family plus its integer parameters. Text form:
///   cycle:N  path:N  complete:N  theta:A,B,C  petersen
///   tree_plus_chords:N,R,SEED  random_connected:N,M,SEED
struct GeneratorSpec {
    std::string family;
    std::vector<std::int64_t> params;

    /// Throws std::invalid_argument on unknown families or wrong arity.
    static GeneratorSpec parse(const std::string& text);
    std::string str() const;
};

/// Deterministic for a fixed spec (seed included). Throws
/// std::invalid_argument when the parameters admit no simple graph.
Graph generate(const GeneratorSpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
/// Hubs 0 and 1 joined by three internally disjoint paths with the given
/// edge counts; internal vertices are numbered path by path from hub 0.
Graph theta_graph(int a, int b, int c);
Graph petersen_graph();
/// Random recursive tree on n vertices plus `chords` random non-edges.
Graph tree_plus_chords(int n, int chords, std::uint64_t seed);
/// Random spanning tree plus m - n + 1 random non-edges.
Graph random_connected(int n, int m, std::uint64_t seed);

}  // namespace dqimc

#endif

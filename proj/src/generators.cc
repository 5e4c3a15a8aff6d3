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

#include "dqimc/generators.h"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dqimc {

namespace {

std::size_t arity(const std::string& family) {
    if (family == "cycle" || family == "path" || family == "complete") {
        return 1;
    }
    if (family == "theta" || family == "tree_plus_chords" || family == "random_connected") {
        return 3;
    }
    if (family == "petersen") {
        return 0;
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

int as_int(std::int64_t x, const char* what) {
    if (x < 0 || x > (1 << 24)) {
        throw std::invalid_argument(std::string("parameter out of range: ") + what);
    }
    return static_cast<int>(x);
}

// Random recursive tree: vertex i attaches to a uniform earlier vertex.
std::vector<Edge> random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.push_back({pick(rng), i});
    }
    return edges;
}

void add_random_non_edges(int n, int count, std::vector<Edge>& edges, std::mt19937_64& rng) {
    std::set<std::pair<int, int>> present;
    for (const auto& e : edges) {
        present.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    long long free = static_cast<long long>(n) * (n - 1) / 2 - static_cast<long long>(present.size());
    if (count > free) {
        throw std::invalid_argument("not enough non-adjacent pairs for " + std::to_string(count) + " extra edges");
    }
    // Sample by rejection while the graph is sparse, otherwise from the
    // explicit list of free pairs.
    if (free > 4LL * count) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        while (count > 0) {
            int u = pick(rng), v = pick(rng);
            if (u == v) {
                continue;
            }
            auto key = std::make_pair(std::min(u, v), std::max(u, v));
            if (present.insert(key).second) {
                edges.push_back({key.first, key.second});
                --count;
            }
        }
        return;
    }
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!present.count({u, v})) {
                pool.push_back({u, v});
            }
        }
    }
    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), pool.size() - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[pick(rng)]);
        edges.push_back({pool[static_cast<std::size_t>(i)].first, pool[static_cast<std::size_t>(i)].second});
    }
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.family = text.substr(0, colon);
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        for (std::string tok; std::getline(ss, tok, ',');) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != tok.size()) {
                throw std::invalid_argument("bad generator parameter '" + tok + "' in '" + text + "'");
            }
            spec.params.push_back(v);
        }
    }
    if (spec.params.size() != arity(spec.family)) {
        throw std::invalid_argument("generator '" + spec.family + "' takes " + std::to_string(arity(spec.family)) +
                                    " parameter(s)");
    }
    return spec;
}

std::string GeneratorSpec::str() const {
    std::string out = family;
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i == 0 ? ':' : ',');
        out += std::to_string(params[i]);
    }
    return out;
}

Graph generate(const GeneratorSpec& spec) {
    if (spec.params.size() != arity(spec.family)) {
        throw std::invalid_argument("wrong parameter count for '" + spec.family + "'");
    }
    const auto& p = spec.params;
    if (spec.family == "cycle") {
        return cycle_graph(as_int(p[0], "n"));
    }
    if (spec.family == "path") {
        return path_graph(as_int(p[0], "n"));
    }
    if (spec.family == "complete") {
        return complete_graph(as_int(p[0], "n"));
    }
    if (spec.family == "theta") {
        return theta_graph(as_int(p[0], "a"), as_int(p[1], "b"), as_int(p[2], "c"));
    }
    if (spec.family == "petersen") {
        return petersen_graph();
    }
    if (p[2] < 0) {
        throw std::invalid_argument("seed must be nonnegative");
    }
    if (spec.family == "tree_plus_chords") {
        return tree_plus_chords(as_int(p[0], "n"), as_int(p[1], "r"), static_cast<std::uint64_t>(p[2]));
    }
    return random_connected(as_int(p[0], "n"), as_int(p[1], "m"), static_cast<std::uint64_t>(p[2]));
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs n >= 3");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) {
        throw std::invalid_argument("path needs n >= 1");
    }
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) {
        throw std::invalid_argument("complete graph needs n >= 1");
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph theta_graph(int a, int b, int c) {
    int lens[3] = {a, b, c};
    int direct = 0;
    for (int len : lens) {
        if (len < 1) {
            throw std::invalid_argument("theta path lengths must be >= 1");
        }
        direct += (len == 1);
    }
    if (direct > 1) {
        throw std::invalid_argument("theta graph with two length-1 paths is not simple");
    }
    int n = 2;
    std::vector<Edge> edges;
    for (int len : lens) {
        int prev = 0;
        for (int step = 1; step < len; ++step) {
            edges.push_back({prev, n});
            prev = n++;
        }
        edges.push_back({prev, 1});
    }
    return Graph(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph tree_plus_chords(int n, int chords, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("tree_plus_chords needs n >= 1");
    }
    std::mt19937_64 rng(seed);
    auto edges = random_tree(n, rng);
    add_random_non_edges(n, chords, edges, rng);
    return Graph(n, std::move(edges));
}

Graph random_connected(int n, int m, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("random_connected needs n >= 1");
    }
    if (m < n - 1) {
        throw std::invalid_argument("random_connected needs m >= n - 1");
    }
    if (static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2) {
        throw std::invalid_argument("random_connected: m exceeds n(n-1)/2");
    }
    std::mt19937_64 rng(seed);
    auto edges = random_tree(n, rng);
    add_random_non_edges(n, m - (n - 1), edges, rng);
    return Graph(n, std::move(edges));
}

}  // namespace dqimc

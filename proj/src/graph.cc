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

#include "dqimc/graph.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dqimc {

Graph::Graph(int num_vertices, std::vector<Edge> edges, std::optional<std::vector<double>> weights)
    : n_(num_vertices), edges_(std::move(edges)), weights_(std::move(weights)) {
    if (n_ < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    if (weights_ && weights_->size() != edges_.size()) {
        throw std::invalid_argument("weight count does not match edge count");
    }
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        Edge& ed = edges_[e];
        if (ed.u < 0 || ed.v < 0 || ed.u >= n_ || ed.v >= n_) {
            throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint out of range");
        }
        if (ed.u == ed.v) {
            throw std::invalid_argument("edge " + std::to_string(e) + " is a self-loop");
        }
        if (ed.u > ed.v) {
            std::swap(ed.u, ed.v);
        }
        if (weights_ && !((*weights_)[e] >= 0)) {
            throw std::invalid_argument("edge " + std::to_string(e) + " has a negative weight");
        }
        incident_[static_cast<std::size_t>(ed.u)].push_back(static_cast<int>(e));
        incident_[static_cast<std::size_t>(ed.v)].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < n_; ++v) {
        auto& inc = incident_[static_cast<std::size_t>(v)];
        std::sort(inc.begin(), inc.end(), [&](int a, int b) { return other(a, v) < other(b, v); });
        for (std::size_t i = 1; i < inc.size(); ++i) {
            if (other(inc[i - 1], v) == other(inc[i], v)) {
                throw std::invalid_argument("duplicate edge {" + std::to_string(v) + "," +
                                            std::to_string(other(inc[i], v)) + "}");
            }
        }
    }
}

std::optional<int> Graph::find_edge(int u, int v) const {
    for (int e : incident(u)) {
        if (other(e, u) == v) {
            return e;
        }
    }
    return std::nullopt;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

double parse_weight(const std::string& tok, int line_no) {
    auto fail = [&]() -> double {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad weight '" + tok + "'");
    };
    auto parse_double = [&](std::string_view s) {
        double x = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            fail();
        }
        return x;
    };
    double w;
    auto slash = tok.find('/');
    if (slash == std::string::npos) {
        w = parse_double(tok);
    } else {
        double num = parse_double(std::string_view(tok).substr(0, slash));
        double den = parse_double(std::string_view(tok).substr(slash + 1));
        if (den <= 0) {
            fail();
        }
        w = num / den;
    }
    if (!(w >= 0) || w == std::numeric_limits<double>::infinity()) {
        fail();
    }
    return w;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<double> weights;
    int weighted = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(strip_comment(line));
        std::vector<std::string> toks;
        for (std::string t; ss >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        auto to_int = [&](const std::string& t) {
            long long x = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
            if (ec != std::errc() || ptr != t.data() + t.size()) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected an integer, got '" +
                                            t + "'");
            }
            return x;
        };
        if (n < 0) {
            if (toks.size() != 2) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": header must be 'n m'");
            }
            n = to_int(toks[0]);
            m = to_int(toks[1]);
            if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
                throw std::invalid_argument("header has invalid sizes");
            }
            continue;
        }
        if (toks.size() != 2 && toks.size() != 3) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": edge must be 'u v [w]'");
        }
        int has_w = toks.size() == 3 ? 1 : 0;
        if (weighted < 0) {
            weighted = has_w;
        } else if (weighted != has_w) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": mixed weighted and unweighted edges");
        }
        long long u = to_int(toks[0]), v = to_int(toks[1]);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        if (has_w) {
            weights.push_back(parse_weight(toks[2], line_no));
        }
    }
    if (n < 0) {
        throw std::invalid_argument("missing 'n m' header");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw std::invalid_argument("header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
    }
    std::optional<std::vector<double>> w;
    if (weighted == 1) {
        w = std::move(weights);
    }
    return Graph(static_cast<int>(n), std::move(edges), std::move(w));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
    out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
    for (int e = 0; e < graph.num_edges(); ++e) {
        const Edge& ed = graph.edge(e);
        out << ed.u << ' ' << ed.v;
        if (graph.weighted()) {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), graph.weight(e));
            out << ' ' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
        }
        out << '\n';
    }
}

Girth girth(const Graph& graph) {
    const int n = graph.num_vertices();
    Girth best;
    std::size_t best_len = std::numeric_limits<std::size_t>::max();
    std::vector<int> dist(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1),
        parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> touched;
    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        for (int v : touched) {
            dist[static_cast<std::size_t>(v)] = -1;
        }
        touched.clear();
        queue.clear();
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        parent_edge[static_cast<std::size_t>(root)] = -1;
        touched.push_back(root);
        queue.push_back(root);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            int dx = dist[static_cast<std::size_t>(x)];
            // Any cycle found from here on has length >= 2*dx + 1.
            if (2 * static_cast<std::size_t>(dx) + 1 >= best_len) {
                break;
            }
            for (int e : graph.incident(x)) {
                if (e == parent_edge[static_cast<std::size_t>(x)]) {
                    continue;
                }
                int y = graph.other(e, x);
                int dy = dist[static_cast<std::size_t>(y)];
                if (dy < 0) {
                    dist[static_cast<std::size_t>(y)] = dx + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    parent_edge[static_cast<std::size_t>(y)] = e;
                    touched.push_back(y);
                    queue.push_back(y);
                    continue;
                }
                if (dy < dx) {
                    continue;  // seen from y's side already
                }
                // Closed walk root..x, y..root. Cut it back to the cycle through
                // the lowest common ancestor.
                std::size_t walk = static_cast<std::size_t>(dx + dy + 1);
                if (walk >= best_len) {
                    continue;
                }
                std::vector<int> left{x}, right{y};
                int a = x, b = y;
                while (dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)]) {
                    a = parent[static_cast<std::size_t>(a)];
                    left.push_back(a);
                }
                while (dist[static_cast<std::size_t>(b)] > dist[static_cast<std::size_t>(a)]) {
                    b = parent[static_cast<std::size_t>(b)];
                    right.push_back(b);
                }
                while (a != b) {
                    a = parent[static_cast<std::size_t>(a)];
                    b = parent[static_cast<std::size_t>(b)];
                    left.push_back(a);
                    right.push_back(b);
                }
                right.pop_back();  // lca is already the tail of left
                std::vector<int> cycle(left.rbegin(), left.rend());
                cycle.insert(cycle.end(), right.begin(), right.end());
                if (cycle.size() < best_len) {
                    best_len = cycle.size();
                    best.length = ExtCount(best_len);
                    best.witness = std::move(cycle);
                }
            }
        }
    }
    return best;
}

std::vector<std::vector<int>> components(const Graph& graph) {
    const SpanningForest f = spanning_forest(graph);
    std::vector<std::vector<int>> out(f.roots.size());
    std::vector<int> index_of_root(static_cast<std::size_t>(graph.num_vertices()), -1);
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
        index_of_root[static_cast<std::size_t>(f.roots[i])] = static_cast<int>(i);
    }
    for (int v = 0; v < graph.num_vertices(); ++v) {
        out[static_cast<std::size_t>(index_of_root[static_cast<std::size_t>(f.root[static_cast<std::size_t>(v)])])]
            .push_back(v);
    }
    return out;
}

SpanningForest spanning_forest(const Graph& graph) {
    const auto n = static_cast<std::size_t>(graph.num_vertices());
    SpanningForest f;
    f.parent.assign(n, -1);
    f.parent_edge.assign(n, -1);
    f.depth.assign(n, -1);
    f.root.assign(n, -1);
    f.order.reserve(n);
    std::vector<char> is_tree(static_cast<std::size_t>(graph.num_edges()), 0);
    for (int r = 0; r < graph.num_vertices(); ++r) {
        if (f.depth[static_cast<std::size_t>(r)] >= 0) {
            continue;
        }
        f.roots.push_back(r);
        f.depth[static_cast<std::size_t>(r)] = 0;
        f.root[static_cast<std::size_t>(r)] = r;
        std::size_t head = f.order.size();
        f.order.push_back(r);
        while (head < f.order.size()) {
            int x = f.order[head++];
            for (int e : graph.incident(x)) {
                int y = graph.other(e, x);
                auto yi = static_cast<std::size_t>(y);
                if (f.depth[yi] >= 0) {
                    continue;
                }
                f.depth[yi] = f.depth[static_cast<std::size_t>(x)] + 1;
                f.parent[yi] = x;
                f.parent_edge[yi] = e;
                f.root[yi] = r;
                is_tree[static_cast<std::size_t>(e)] = 1;
                f.order.push_back(y);
            }
        }
    }
    for (int e = 0; e < graph.num_edges(); ++e) {
        (is_tree[static_cast<std::size_t>(e)] ? f.tree_edges : f.non_tree_edges).push_back(e);
    }
    return f;
}

int cyclomatic(const Graph& graph) {
    return graph.num_edges() - graph.num_vertices() + static_cast<int>(components(graph).size());
}

std::vector<int> tree_path(const SpanningForest& forest, int a, int b) {
    if (forest.root[static_cast<std::size_t>(a)] != forest.root[static_cast<std::size_t>(b)]) {
        throw std::invalid_argument("tree_path: vertices lie in different trees");
    }
    std::vector<int> up_a, up_b;
    while (forest.depth[static_cast<std::size_t>(a)] > forest.depth[static_cast<std::size_t>(b)]) {
        up_a.push_back(forest.parent_edge[static_cast<std::size_t>(a)]);
        a = forest.parent[static_cast<std::size_t>(a)];
    }
    while (forest.depth[static_cast<std::size_t>(b)] > forest.depth[static_cast<std::size_t>(a)]) {
        up_b.push_back(forest.parent_edge[static_cast<std::size_t>(b)]);
        b = forest.parent[static_cast<std::size_t>(b)];
    }
    while (a != b) {
        up_a.push_back(forest.parent_edge[static_cast<std::size_t>(a)]);
        up_b.push_back(forest.parent_edge[static_cast<std::size_t>(b)]);
        a = forest.parent[static_cast<std::size_t>(a)];
        b = forest.parent[static_cast<std::size_t>(b)];
    }
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

std::vector<EdgeVector> fundamental_cycles(const Graph& graph, const SpanningForest& forest) {
    if (forest.parent.size() != static_cast<std::size_t>(graph.num_vertices()) ||
        forest.tree_edges.size() + forest.non_tree_edges.size() != static_cast<std::size_t>(graph.num_edges())) {
        throw std::invalid_argument("fundamental_cycles: forest does not belong to graph");
    }
    std::vector<EdgeVector> out;
    out.reserve(forest.non_tree_edges.size());
    for (int e : forest.non_tree_edges) {
        EdgeVector c(static_cast<std::size_t>(graph.num_edges()));
        c.set(static_cast<std::size_t>(e));
        for (int t : tree_path(forest, graph.edge(e).u, graph.edge(e).v)) {
            c.set(static_cast<std::size_t>(t));
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace dqimc

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

#include "dqimc/dqi_plan.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqimc {

int choose_l(const ExtCount& girth, int m, int cap) {
    if (cap < 0) {
        throw std::invalid_argument("degree cap must be nonnegative");
    }
    if (girth.is_infinite()) {
        return std::min(m, cap);
    }
    std::size_t g = girth.value();
    int l = g == 0 ? 0 : static_cast<int>((g - 1) / 2);
    return std::min(l, cap);
}

int simulation_cap(int m, int log2_budget) {
    const double budget = std::ldexp(1.0, log2_budget);
    double term = 1, total = 1;
    int l = 0;
    while (l < m) {
        term = term * (m - l) / (l + 1);
        if (total + term > budget) {
            break;
        }
        total += term;
        ++l;
    }
    return l;
}

std::vector<double> dqi_coefficients(std::span<const double> eigvec, long long m) {
    if (eigvec.empty() || static_cast<long long>(eigvec.size()) > m + 1) {
        throw std::invalid_argument("eigenvector length must be in 1..m+1");
    }
    std::vector<double> mu(eigvec.size());
    const long double lgm = std::lgamma(static_cast<long double>(m) + 1);
    for (std::size_t k = 0; k < eigvec.size(); ++k) {
        long double log_binom = lgm - std::lgamma(static_cast<long double>(k) + 1) -
                                std::lgamma(static_cast<long double>(m - static_cast<long long>(k)) + 1);
        long double v = eigvec[k] * std::exp(-0.5L * log_binom);
        mu[k] = static_cast<double>(k % 2 ? -v : v);
    }
    return mu;
}

double predicted_expectation(long long m, double lambda) {
    return 0.5 * (static_cast<double>(m) + lambda);
}

namespace {

DqiPlan assemble(const Graph& graph, Girth g, int cap, int l) {
    DqiPlan p;
    p.n = graph.num_vertices();
    p.m = graph.num_edges();
    p.girth = std::move(g);
    p.cap = cap;
    p.l = l;
    EigenPair top = lambda_max_tridiag(TridiagonalSpec::dqi(p.m, p.l));
    p.lambda_max = top.lambda;
    p.eigvec = std::move(top.vector);
    p.coeffs = dqi_coefficients(p.eigvec, p.m);
    p.predicted_expected_cut = predicted_expectation(p.m, p.lambda_max);
    p.formula_exact = p.girth.length.is_infinite() ||
                      p.girth.length.value() >= 2 * static_cast<std::size_t>(p.l) + 2;
    return p;
}

}  // namespace

DqiPlan plan(const Graph& graph, int cap) {
    if (graph.num_edges() < 1) {
        throw std::invalid_argument("plan needs at least one edge");
    }
    Girth g = girth(graph);
    int l = std::min(choose_l(g.length, graph.num_edges(), cap), graph.num_edges());
    return assemble(graph, std::move(g), cap, l);
}

DqiPlan plan_with_degree(const Graph& graph, int l) {
    if (graph.num_edges() < 1) {
        throw std::invalid_argument("plan needs at least one edge");
    }
    if (l < 0 || l > graph.num_edges()) {
        throw std::invalid_argument("degree must satisfy 0 <= l <= m");
    }
    return assemble(graph, girth(graph), l, l);
}

}  // namespace dqimc

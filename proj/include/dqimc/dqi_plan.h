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

#ifndef DQIMC_DQI_PLAN_H
#define DQIMC_DQI_PLAN_H

#include <span>
#include <vector>

#include "dqimc/common.h"
#include "dqimc/graph.h"
#include "dqimc/tridiagonal.h"

namespace dqimc {

/// Default degree cap when no simulation is planned.
inline constexpr int kAnalysisCap = 10000;

/// Everything the DQI pipeline decides before touching a quantum register.
struct DqiPlan {
    int n = 0;
    int m = 0;
    Girth girth;
    int cap = 0;
    int l = 0;
    double lambda_max = 0;
    /// Perron vector u_0..u_l of A^(m,l).
    std::vector<double> eigvec;
    /// Polynomial coefficients mu_0..mu_l in the elementary symmetric basis.
    std::vector<double> coeffs;
    double predicted_expected_cut = 0;
    /// True when the girth exceeds 2l+1 (or is infinite); only then is the
    /// predicted expectation attained exactly.
    bool formula_exact = false;
};

/// min(floor((g-1)/2), cap) for finite girth, min(m, cap) on forests.
int choose_l(const ExtCount& girth, int m, int cap);

/// Largest l <= m with sum_{k<=l} C(m,k) <= 2^log2_budget.
int simulation_cap(int m, int log2_budget);

/// mu_k = (-1)^k u_k / sqrt(C(m,k)).
std::vector<double> dqi_coefficients(std::span<const double> eigvec, long long m);

/// (m + lambda) / 2.
double predicted_expectation(long long m, double lambda);

/// Full analysis of a graph with m >= 1, degree capped at `cap`.
DqiPlan plan(const Graph& graph, int cap);

/// As plan(), but with the degree forced to l (0 <= l <= m).
DqiPlan plan_with_degree(const Graph& graph, int l);

}  // namespace dqimc

#endif

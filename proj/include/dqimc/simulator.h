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

#ifndef DQIMC_SIMULATOR_H
#define DQIMC_SIMULATOR_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dqimc/common.h"
#include "dqimc/cut.h"
#include "dqimc/graph.h"

namespace dqimc {

/// counts[j] = number of assignments z in {-1,1}^V cutting exactly j edges.
struct CutHistogram {
    int n = 0;
    std::vector<std::uint64_t> counts;  // size m + 1

    std::uint64_t total() const;
};

/// Exact histogram by Gray-code enumeration of 2^{n-1} assignments with
/// vertex 0 pinned, each counted twice (global flip). Throws BudgetExceeded
/// when n - 1 > budgets.assignment_log2.
CutHistogram cut_histogram(const Graph& graph, const Budgets& budgets = {});

/// Binary Krawtchouk polynomial K_k(j; m) = sum_i (-1)^i C(j,i) C(m-j,k-i):
/// the k-th elementary symmetric polynomial of m signs, j of them negative.
boost::multiprecision::cpp_int krawtchouk(int k, int j, int m);

/// Q(j) = sum_k mu_k K_k(j; m) for j = 0..m, the value of the symmetric
/// polynomial q on any assignment that cuts j edges.
std::vector<double> q_profile(std::span<const double> coeffs, int m);

struct SimulationReport {
    std::string method;  // "histogram" or "statevector"
    double expected_cut = 0;
    /// distribution[j] = probability of sampling a cut of value j.
    std::vector<double> distribution;
    CutHistogram histogram;
    /// Normalized q(z) over all 2^n assignments, index bit v <-> z_v = -1.
    std::optional<std::vector<double>> amplitudes;
    std::vector<CutAssignment> samples;
};

/// Expected cut under z ~ q(z)^2 via the histogram and Krawtchouk values.
/// Throws std::domain_error if q vanishes on every attainable cut value.
SimulationReport dqi_expectation_exact(const Graph& graph, std::span<const double> coeffs,
                                       const Budgets& budgets = {});
SimulationReport dqi_expectation_exact(const CutHistogram& histogram, std::span<const double> coeffs);

/// Same distribution through the syndrome register: accumulate mu_|beta| at
/// alpha = f(beta) for every |beta| <= l, then Walsh-Hadamard transform the
/// 2^n vertex amplitudes and square.
SimulationReport dqi_statevector(const Graph& graph, std::span<const double> coeffs, int l,
                                 const Budgets& budgets = {}, bool keep_amplitudes = false);

struct OptimizedPolynomial {
    double best_expectation = 0;
    /// Unit norm, first nonzero entry positive.
    std::vector<double> coeffs;
};

/// Best expected cut over all degree-<=l symmetric polynomials, as the top
/// generalized eigenpair of (C, D) restricted to the range of D.
OptimizedPolynomial optimize_exact(const Graph& graph, int l, const Budgets& budgets = {});
OptimizedPolynomial optimize_exact(const CutHistogram& histogram, int l);

/// sum_j N_j j^3 / sum_j N_j j^2: the mean cut when sampling z ~ h(z)^2.
/// Throws std::domain_error on edgeless graphs.
double qfs_baseline_expectation(const Graph& graph, const Budgets& budgets = {});
double qfs_baseline_expectation(const CutHistogram& histogram);

/// Draws cut values from report.distribution, then an assignment uniformly
/// among those with that cut value by rejection. Deterministic per seed.
std::vector<CutAssignment> sample_cuts(const Graph& graph, const SimulationReport& report, int count,
                                       std::uint64_t seed);

/// Fast Walsh-Hadamard transform in place (unnormalized); size must be a
/// power of two.
void walsh_hadamard(std::span<double> data);

}  // namespace dqimc

#endif

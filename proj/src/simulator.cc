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

#include "dqimc/simulator.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "dqimc/parity.h"

namespace dqimc {

using boost::multiprecision::cpp_int;

std::uint64_t CutHistogram::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) {
        t += c;
    }
    return t;
}

namespace {

void check_assignment_budget(const Graph& graph, const Budgets& budgets) {
    int n = graph.num_vertices();
    if (n - 1 > budgets.assignment_log2 || n > 63) {
        throw BudgetExceeded("assignments", "enumerating 2^" + std::to_string(std::max(n - 1, 0)) +
                                                " assignments exceeds the budget 2^" +
                                                std::to_string(budgets.assignment_log2));
    }
}

// K_k(j; m) for k = 0..l, j = 0..m via the three-term recurrence in k:
// (k+1) K_{k+1} = (m - 2j) K_k - (m - k + 1) K_{k-1}.
std::vector<std::vector<cpp_int>> krawtchouk_table(int l, int m) {
    std::vector<std::vector<cpp_int>> K(static_cast<std::size_t>(l + 1), std::vector<cpp_int>(m + 1));
    for (int j = 0; j <= m; ++j) {
        K[0][static_cast<std::size_t>(j)] = 1;
        if (l >= 1) {
            K[1][static_cast<std::size_t>(j)] = m - 2 * j;
        }
        for (int k = 1; k < l; ++k) {
            cpp_int next = cpp_int(m - 2 * j) * K[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -
                           cpp_int(m - k + 1) * K[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)];
            K[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)] = next / (k + 1);
        }
    }
    return K;
}

// Relative size below which a q value is treated as exact cancellation.
constexpr long double kCancellation = 1e-13L;

long double log_binomial(int m, int k) {
    return std::lgamma(static_cast<long double>(m) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
           std::lgamma(static_cast<long double>(m - k) + 1);
}

SimulationReport report_from_weights(std::string method, const std::vector<long double>& mass, CutHistogram hist) {
    long double total = 0, first = 0;
    for (std::size_t j = 0; j < mass.size(); ++j) {
        total += mass[j];
        first += mass[j] * static_cast<long double>(j);
    }
    if (!(total > 0)) {
        throw std::domain_error("polynomial vanishes on every assignment; distribution undefined");
    }
    SimulationReport r;
    r.method = std::move(method);
    r.expected_cut = static_cast<double>(first / total);
    r.distribution.resize(mass.size());
    for (std::size_t j = 0; j < mass.size(); ++j) {
        r.distribution[j] = static_cast<double>(mass[j] / total);
    }
    r.histogram = std::move(hist);
    return r;
}

}  // namespace

CutHistogram cut_histogram(const Graph& graph, const Budgets& budgets) {
    check_assignment_budget(graph, budgets);
    const int n = graph.num_vertices();
    const int m = graph.num_edges();
    CutHistogram h;
    h.n = n;
    h.counts.assign(static_cast<std::size_t>(m + 1), 0);
    if (n == 0) {
        h.counts[0] = 1;
        return h;
    }
    std::uint64_t z = 0;  // bit v set: vertex v on the -1 side; vertex 0 pinned
    int cut = 0;
    const std::uint64_t states = std::uint64_t{1} << (n - 1);
    h.counts[0] += 2;
    for (std::uint64_t i = 1; i < states; ++i) {
        int v = std::countr_zero(i) + 1;
        for (int e : graph.incident(v)) {
            int w = graph.other(e, v);
            bool was_cut = ((z >> v) ^ (z >> w)) & 1;
            cut += was_cut ? -1 : 1;
        }
        z ^= std::uint64_t{1} << v;
        h.counts[static_cast<std::size_t>(cut)] += 2;
    }
    return h;
}

cpp_int krawtchouk(int k, int j, int m) {
    if (m < 0 || k < 0 || j < 0 || k > m || j > m) {
        throw std::invalid_argument("krawtchouk needs 0 <= k, j <= m");
    }
    auto binom = [](int a, int b) -> cpp_int {
        if (b < 0 || b > a) {
            return 0;
        }
        cpp_int r = 1;
        for (int i = 1; i <= b; ++i) {
            r = r * (a - b + i) / i;
        }
        return r;
    };
    cpp_int sum = 0;
    for (int i = 0; i <= k; ++i) {
        cpp_int term = binom(j, i) * binom(m - j, k - i);
        if (i % 2) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

std::vector<double> q_profile(std::span<const double> coeffs, int m) {
    if (coeffs.empty()) {
        throw std::invalid_argument("need at least one coefficient");
    }
    const int l = static_cast<int>(coeffs.size()) - 1;
    if (l > m) {
        throw std::invalid_argument("polynomial degree exceeds the number of edges");
    }
    auto K = krawtchouk_table(l, m);
    std::vector<double> Q(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) {
        long double s = 0;
        for (int k = 0; k <= l; ++k) {
            s += static_cast<long double>(coeffs[static_cast<std::size_t>(k)]) *
                 K[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].convert_to<long double>();
        }
        Q[static_cast<std::size_t>(j)] = static_cast<double>(s);
    }
    return Q;
}

SimulationReport dqi_expectation_exact(const Graph& graph, std::span<const double> coeffs, const Budgets& budgets) {
    return dqi_expectation_exact(cut_histogram(graph, budgets), coeffs);
}

SimulationReport dqi_expectation_exact(const CutHistogram& histogram, std::span<const double> coeffs) {
    CutHistogram hist = histogram;
    const int m = static_cast<int>(hist.counts.size()) - 1;
    auto Q = q_profile(coeffs, m);
    const auto K = krawtchouk_table(static_cast<int>(coeffs.size()) - 1, m);
    std::vector<long double> mass(hist.counts.size());
    for (std::size_t j = 0; j < mass.size(); ++j) {
        // Values that are pure cancellation noise count as exact zeros.
        long double bound = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            bound += std::abs(static_cast<long double>(coeffs[k])) * abs(K[k][j]).convert_to<long double>();
        }
        long double q = std::abs(static_cast<long double>(Q[j])) <= kCancellation * bound ? 0 : Q[j];
        mass[j] = static_cast<long double>(hist.counts[j]) * q * q;
    }
    return report_from_weights("histogram", mass, std::move(hist));
}

void walsh_hadamard(std::span<double> data) {
    const std::size_t size = data.size();
    if (!std::has_single_bit(size)) {
        throw std::invalid_argument("walsh_hadamard needs a power-of-two length");
    }
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                double a = data[i], b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
    }
}

SimulationReport dqi_statevector(const Graph& graph, std::span<const double> coeffs, int l, const Budgets& budgets,
                                 bool keep_amplitudes) {
    const int n = graph.num_vertices();
    const int m = graph.num_edges();
    if (l < 0 || l > m || static_cast<std::size_t>(l) >= coeffs.size()) {
        throw std::invalid_argument("degree l must satisfy 0 <= l <= m and l < number of coefficients");
    }
    if (n > budgets.statevector_log2) {
        throw BudgetExceeded("statevector", "state vector of 2^" + std::to_string(n) + " amplitudes exceeds the budget 2^" +
                                                std::to_string(budgets.statevector_log2));
    }
    long double syndromes = 0, term = 1;
    for (int k = 0; k <= l; ++k) {
        syndromes += term;
        term = term * (m - k) / (k + 1);
    }
    if (syndromes > std::ldexp(1.0L, budgets.syndrome_log2)) {
        throw BudgetExceeded("syndromes", "sum_{k<=" + std::to_string(l) + "} C(" + std::to_string(m) +
                                              ",k) exceeds the budget 2^" + std::to_string(budgets.syndrome_log2));
    }

    // Syndrome register after uncomputing the error register: amplitude mu_k
    // at alpha = f(beta) for each beta of weight k (collisions add up).
    const auto masks = edge_vertex_masks(graph);
    std::vector<double> amp(std::size_t{1} << n, 0.0);
    auto accumulate = [&](auto&& self, int start, int depth, std::uint64_t alpha) -> void {
        amp[alpha] += coeffs[static_cast<std::size_t>(depth)];
        if (depth == l) {
            return;
        }
        for (int e = start; e < m; ++e) {
            self(self, e + 1, depth + 1, alpha ^ masks[static_cast<std::size_t>(e)]);
        }
    };
    accumulate(accumulate, 0, 0, 0);
    double l1 = 0;
    for (double a : amp) {
        l1 += std::abs(a);
    }
    walsh_hadamard(amp);
    for (double& a : amp) {
        if (std::abs(a) <= kCancellation * l1) {
            a = 0;
        }
    }

    std::vector<long double> mass(static_cast<std::size_t>(m + 1), 0);
    CutHistogram hist;
    hist.n = n;
    hist.counts.assign(static_cast<std::size_t>(m + 1), 0);
    std::uint64_t z = 0;
    int cut = 0;
    long double norm2 = 0;
    for (std::uint64_t i = 0; i < amp.size(); ++i) {
        if (i > 0) {
            int v = std::countr_zero(i);
            for (int e : graph.incident(v)) {
                int w = graph.other(e, v);
                cut += (((z >> v) ^ (z >> w)) & 1) ? -1 : 1;
            }
            z ^= std::uint64_t{1} << v;
        }
        long double a = amp[z];
        mass[static_cast<std::size_t>(cut)] += a * a;
        hist.counts[static_cast<std::size_t>(cut)] += 1;
        norm2 += a * a;
    }
    SimulationReport r = report_from_weights("statevector", mass, std::move(hist));
    if (keep_amplitudes) {
        double inv = static_cast<double>(1 / std::sqrt(norm2));
        for (double& a : amp) {
            a *= inv;
        }
        r.amplitudes = std::move(amp);
    }
    return r;
}

OptimizedPolynomial optimize_exact(const CutHistogram& histogram, int l) {
    const int m = static_cast<int>(histogram.counts.size()) - 1;
    if (l < 0 || l > m) {
        throw std::invalid_argument("optimize_exact needs 0 <= l <= m");
    }
    const auto K = krawtchouk_table(l, m);
    const long double total = static_cast<long double>(histogram.total());
    // Basis psi_k = K_k / sqrt(C(m,k)) keeps every entry in [-1, 1].
    std::vector<long double> inv_sqrt_binom(static_cast<std::size_t>(l + 1));
    for (int k = 0; k <= l; ++k) {
        inv_sqrt_binom[static_cast<std::size_t>(k)] = std::exp(-0.5L * log_binomial(m, k));
    }
    const Eigen::Index dim = l + 1;
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(dim, dim), C = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::VectorXd psi(dim);
    for (int j = 0; j <= m; ++j) {
        if (histogram.counts[static_cast<std::size_t>(j)] == 0) {
            continue;
        }
        double freq = static_cast<double>(static_cast<long double>(histogram.counts[static_cast<std::size_t>(j)]) / total);
        for (int k = 0; k <= l; ++k) {
            psi(k) = static_cast<double>(K[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].convert_to<long double>() *
                                         inv_sqrt_binom[static_cast<std::size_t>(k)]);
        }
        D.noalias() += freq * psi * psi.transpose();
        C.noalias() += (freq * j) * psi * psi.transpose();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dsolve(D);
    const Eigen::VectorXd& dvals = dsolve.eigenvalues();
    const double dmax = dvals.maxCoeff();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (dvals(i) > 1e-12 * dmax) {
            keep.push_back(i);
        }
    }
    Eigen::MatrixXd W(dim, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        W.col(static_cast<Eigen::Index>(c)) = dsolve.eigenvectors().col(keep[c]) / std::sqrt(dvals(keep[c]));
    }
    Eigen::MatrixXd M = W.transpose() * C * W;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> msolve((M + M.transpose()) / 2);
    const Eigen::Index top = msolve.eigenvalues().size() - 1;
    Eigen::VectorXd w = W * msolve.eigenvectors().col(top);

    OptimizedPolynomial out;
    out.best_expectation = msolve.eigenvalues()(top);
    out.coeffs.resize(static_cast<std::size_t>(dim));
    double norm2 = 0;
    for (int k = 0; k <= l; ++k) {
        double mu = static_cast<double>(w(k) * inv_sqrt_binom[static_cast<std::size_t>(k)]);
        out.coeffs[static_cast<std::size_t>(k)] = mu;
        norm2 += mu * mu;
    }
    double sign = 1;
    for (double mu : out.coeffs) {
        if (std::abs(mu) > 1e-14 * std::sqrt(norm2)) {
            sign = mu > 0 ? 1 : -1;
            break;
        }
    }
    for (double& mu : out.coeffs) {
        mu *= sign / std::sqrt(norm2);
    }
    return out;
}

OptimizedPolynomial optimize_exact(const Graph& graph, int l, const Budgets& budgets) {
    return optimize_exact(cut_histogram(graph, budgets), l);
}

double qfs_baseline_expectation(const CutHistogram& histogram) {
    long double num = 0, den = 0;
    for (std::size_t j = 0; j < histogram.counts.size(); ++j) {
        long double c = static_cast<long double>(histogram.counts[j]);
        long double jj = static_cast<long double>(j);
        num += c * jj * jj * jj;
        den += c * jj * jj;
    }
    if (!(den > 0)) {
        throw std::domain_error("QFS baseline undefined: h is identically zero");
    }
    return static_cast<double>(num / den);
}

double qfs_baseline_expectation(const Graph& graph, const Budgets& budgets) {
    if (graph.num_edges() == 0) {
        throw std::domain_error("QFS baseline undefined on an edgeless graph");
    }
    return qfs_baseline_expectation(cut_histogram(graph, budgets));
}

std::vector<CutAssignment> sample_cuts(const Graph& graph, const SimulationReport& report, int count,
                                       std::uint64_t seed) {
    if (report.distribution.size() != static_cast<std::size_t>(graph.num_edges() + 1)) {
        throw std::invalid_argument("report does not match graph");
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<int> pick_value(report.distribution.begin(), report.distribution.end());
    const auto n = static_cast<std::size_t>(graph.num_vertices());
    std::vector<CutAssignment> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int s = 0; s < count; ++s) {
        int target = pick_value(rng);
        while (true) {
            VertexVector z(n);
            std::uint64_t word = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (v % 64 == 0) {
                    word = rng();
                }
                z.set(v, (word >> (v % 64)) & 1);
            }
            int value = cut_size(graph, z);
            if (value == target) {
                out.push_back({std::move(z), static_cast<double>(value)});
                break;
            }
        }
    }
    return out;
}

}  // namespace dqimc

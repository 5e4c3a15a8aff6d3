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

#ifndef DQIMC_HARNESS_H
#define DQIMC_HARNESS_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dqimc/graph.h"
#include "dqimc/report.h"

namespace dqimc {

/// A graph named by a generator spec ("cycle:6") or an edge-list path.
struct Instance {
    std::string id;
    Graph graph;
};

/// Generator spec if `text` parses as one, otherwise an edge-list file.
Instance load_instance(const std::string& text);
Instance generated_instance(const std::string& spec);

/// Expands integer ranges in generator specs: "cycle:4..8" and
/// "tree_plus_chords:50,0..6,1" (optionally "a..b/step"). At most one
/// parameter may be a range. Anything that is not a generator spec is kept.
std::vector<std::string> expand_family(const std::string& text);

json run_analyze(const Graph& graph, const RunConfig& config);

struct SimulateOptions {
    std::optional<int> degree;  // overrides the planned l
    int samples = 0;
    bool amplitudes = false;
};

/// Plan, both simulation paths with their cross-check, the optimal degree-l
/// polynomial and the QFS baseline.
json run_simulate(const Graph& graph, const SimulateOptions& options, const RunConfig& config);

/// Throws Infeasible when no subgraph with at most l edges has parity alpha.
json run_decode(const Graph& graph, int l, const std::string& alpha_hex, const RunConfig& config);

/// method: auto | brute | fpt | tree.
json run_solve(const Graph& graph, const std::string& method, const RunConfig& config, bool timings);

struct ComparisonRow {
    std::string id;
    int n = 0;
    int m = 0;
    ExtCount girth = ExtCount::infinite();
    int mu = 0;
    int l = 0;
    double lambda_max = 0;
    double predicted_dqi = 0;
    std::optional<double> simulated_dqi;
    std::optional<double> optimal_degree_l;
    std::optional<double> qfs_baseline;
    std::optional<double> classical_opt;
    std::string classical_method;
    double spanning_tree_cut = 0;
    std::size_t tree_parts = 0;
    bool formula_exact = false;
    std::string error;
    double seconds = 0;
};

struct CompareOptions {
    Budgets budgets;
    bool timings = false;
    int jobs = 1;
};

/// One row per instance; failures are recorded in the row's error field.
ComparisonRow compare_row(const std::string& id, const Graph& graph, const CompareOptions& options);
/// Rows in input order; up to options.jobs rows run concurrently.
std::vector<ComparisonRow> compare(const std::vector<std::string>& instances, const CompareOptions& options);

/// Column order of the comparison CSV.
const std::vector<std::string>& comparison_columns(bool timings);
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows, const RunConfig& config,
                          bool timings);
json comparison_json(const std::vector<ComparisonRow>& rows, const RunConfig& config, bool timings);

struct LambdaSweepRow {
    long long m = 0;
    int l = 0;
    double lambda_a = 0;  // lambda_max(A^(m,l))
    double lambda_b = 0;  // lambda_max(B^(l))
    double ratio = 0;     // lambda_a / sqrt(m l)
    bool comparison_bound = false;  // lambda_a <= sqrt(m) lambda_b
    bool hermite_bound = false;     // lambda_b <= 2 sqrt(2) sqrt(l)
};

/// m = m_first, m_first + step, ..., m_last with l = floor(m / divisor).
std::vector<LambdaSweepRow> lambda_sweep(long long m_first, long long m_last, long long step, int divisor);
void write_lambda_csv(std::ostream& out, const std::vector<LambdaSweepRow>& rows, const RunConfig& config);

}  // namespace dqimc

#endif

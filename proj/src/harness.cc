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

#include "dqimc/harness.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "dqimc/generators.h"
#include "dqimc/parity.h"

namespace dqimc {

namespace {

constexpr double kConsistencyTol = 1e-9;

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string fmt_opt(const std::optional<double>& x) {
    return x ? fmt_real(*x) : std::string();
}

json opt_json(const std::optional<double>& x) {
    return x ? json(round15(*x)) : json(nullptr);
}

bool looks_like_spec(const std::string& text) {
    auto family = text.substr(0, text.find(':'));
    for (const char* f :
         {"cycle", "path", "complete", "theta", "petersen", "tree_plus_chords", "random_connected"}) {
        if (family == f) {
            return true;
        }
    }
    return false;
}

}  // namespace

Instance generated_instance(const std::string& spec) {
    GeneratorSpec g = GeneratorSpec::parse(spec);
    return {g.str(), generate(g)};
}

Instance load_instance(const std::string& text) {
    if (looks_like_spec(text) && !std::filesystem::exists(text)) {
        return generated_instance(text);
    }
    return {text, read_edge_list_file(text)};
}

std::vector<std::string> expand_family(const std::string& text) {
    if (!looks_like_spec(text) || text.find("..") == std::string::npos) {
        return {text};
    }
    auto colon = text.find(':');
    std::string head = text.substr(0, colon + 1);
    std::vector<std::string> params;
    {
        std::string rest = text.substr(colon + 1);
        std::size_t start = 0;
        while (true) {
            auto comma = rest.find(',', start);
            params.push_back(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    int range_at = -1;
    long long lo = 0, hi = 0, step = 1;
    for (std::size_t i = 0; i < params.size(); ++i) {
        auto dots = params[i].find("..");
        if (dots == std::string::npos) {
            continue;
        }
        if (range_at >= 0) {
            throw std::invalid_argument("at most one range per generator spec: '" + text + "'");
        }
        range_at = static_cast<int>(i);
        std::string tail = params[i].substr(dots + 2);
        auto slash = tail.find('/');
        try {
            lo = std::stoll(params[i].substr(0, dots));
            hi = std::stoll(tail.substr(0, slash));
            if (slash != std::string::npos) {
                step = std::stoll(tail.substr(slash + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad range in '" + text + "'");
        }
        if (step <= 0 || hi < lo) {
            throw std::invalid_argument("bad range in '" + text + "'");
        }
    }
    std::vector<std::string> out;
    for (long long v = lo; v <= hi; v += step) {
        std::string s = head;
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += static_cast<int>(i) == range_at ? std::to_string(v) : params[i];
        }
        out.push_back(s);
    }
    return out;
}

json run_analyze(const Graph& graph, const RunConfig& config) {
    int cap = config.params.value("cap", kAnalysisCap);
    return {{"config", to_json(config)}, {"plan", to_json(plan(graph, cap))}};
}

json run_simulate(const Graph& graph, const SimulateOptions& options, const RunConfig& config) {
    const Budgets& budgets = config.budgets;
    DqiPlan p = options.degree ? plan_with_degree(graph, *options.degree)
                               : plan(graph, simulation_cap(graph.num_edges(), budgets.syndrome_log2));
    SimulationReport hist = dqi_expectation_exact(graph, p.coeffs, budgets);
    SimulationReport sv = dqi_statevector(graph, p.coeffs, p.l, budgets, options.amplitudes);
    const double diff = std::abs(hist.expected_cut - sv.expected_cut);
    if (options.samples > 0) {
        hist.samples = sample_cuts(graph, hist, options.samples, config.seed);
    }
    OptimizedPolynomial best = optimize_exact(hist.histogram, p.l);
    json out = {{"config", to_json(config)},
                {"plan", to_json(p)},
                {"histogram_path", to_json(hist)},
                {"statevector_path", to_json(sv)},
                {"path_difference", round15(diff)},
                {"paths_agree", diff <= 1e-9},
                {"optimal_degree_l", {{"expected_cut", round15(best.best_expectation)},
                                      {"coeffs", json::array()}}},
                {"qfs_baseline", round15(qfs_baseline_expectation(hist.histogram))}};
    for (double mu : best.coeffs) {
        out["optimal_degree_l"]["coeffs"].push_back(round15(mu));
    }
    if (!p.formula_exact) {
        out["deficit"] = {
            {"predicted", round15(p.predicted_expected_cut)},
            {"simulated", round15(hist.expected_cut)},
            {"gap", round15(p.predicted_expected_cut - hist.expected_cut)},
            {"note", "girth <= 2l+1: the closed-form expectation is an estimate, the simulated value is exact"}};
    }
    return out;
}

json run_decode(const Graph& graph, int l, const std::string& alpha_hex, const RunConfig& config) {
    VertexVector alpha(BitVector::from_hex(static_cast<std::size_t>(graph.num_vertices()), alpha_hex));
    auto beta = decode_parity(graph, l, alpha, config.budgets);
    if (!beta) {
        throw Infeasible("no subgraph with at most " + std::to_string(l) + " edges has parity vector " +
                         alpha.to_hex());
    }
    json edges = json::array();
    for (std::size_t e : beta->ones()) {
        const Edge& ed = graph.edge(static_cast<int>(e));
        edges.push_back({{"id", e}, {"u", ed.u}, {"v", ed.v}});
    }
    return {{"config", to_json(config)},
            {"alpha", alpha.to_hex()},
            {"l", l},
            {"beta", beta->to_hex()},
            {"size", beta->popcount()},
            {"edges", edges},
            {"parity_check", parity_map(graph, *beta) == alpha}};
}

json run_solve(const Graph& graph, const std::string& method, const RunConfig& config, bool timings) {
    MaxCutResult r;
    if (method == "brute") {
        r = brute_force_maxcut(graph, config.budgets);
    } else if (method == "fpt") {
        r = fpt_maxcut(graph, config.budgets);
    } else if (method == "tree") {
        r = spanning_tree_cut(graph);
    } else if (method == "auto") {
        if (2 * cyclomatic(graph) <= config.budgets.fpt_log2) {
            r = fpt_maxcut(graph, config.budgets);
        } else {
            r = brute_force_maxcut(graph, config.budgets);
        }
    } else {
        throw std::invalid_argument("unknown method '" + method + "' (expected auto|brute|fpt|tree)");
    }
    json out = {{"config", to_json(config)}, {"result", to_json(r, timings)}};
    out["result"]["exact"] = r.method != "tree";
    out["result"]["recomputed_value"] = round15(cut_weight(graph, r.assignment.sides));
    return out;
}

ComparisonRow compare_row(const std::string& id, const Graph& graph, const CompareOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    ComparisonRow row;
    row.id = id;
    row.n = graph.num_vertices();
    row.m = graph.num_edges();
    try {
        row.mu = cyclomatic(graph);
        if (row.m == 0) {
            throw std::invalid_argument("graph has no edges");
        }
        DqiPlan p = plan(graph, kAnalysisCap);
        row.girth = p.girth.length;
        row.l = p.l;
        row.lambda_max = p.lambda_max;
        row.predicted_dqi = p.predicted_expected_cut;
        row.formula_exact = p.formula_exact;

        const Budgets& b = options.budgets;
        if (row.n - 1 <= b.assignment_log2) {
            CutHistogram hist = cut_histogram(graph, b);
            row.simulated_dqi = dqi_expectation_exact(hist, p.coeffs).expected_cut;
            row.optimal_degree_l = optimize_exact(hist, p.l).best_expectation;
            row.qfs_baseline = qfs_baseline_expectation(hist);
        }
        if (2 * row.mu <= b.fpt_log2) {
            row.classical_opt = fpt_maxcut(graph, b).value;
            row.classical_method = "fpt";
        } else if (row.n - 1 <= b.assignment_log2) {
            row.classical_opt = brute_force_maxcut(graph, b).value;
            row.classical_method = "brute";
        }
        row.spanning_tree_cut = spanning_tree_cut(graph).value;
        row.tree_parts = tree_partition(graph).parts.size();

        std::string problems;
        auto check_below = [&](const char* name, const std::optional<double>& v) {
            if (row.classical_opt && v && *v > *row.classical_opt + kConsistencyTol) {
                problems += std::string(name) + " " + fmt_real(*v) + " exceeds the classical optimum; ";
            }
        };
        check_below("simulated_dqi", row.simulated_dqi);
        check_below("optimal_degree_l", row.optimal_degree_l);
        check_below("qfs_baseline", row.qfs_baseline);
        if (row.formula_exact) {
            check_below("predicted_dqi", row.predicted_dqi);
        }
        if (!graph.weighted() && row.spanning_tree_cut < row.m - row.mu) {
            problems += "spanning-tree cut below m - mu; ";
        }
        if (!problems.empty()) {
            row.error = "consistency: " + problems.substr(0, problems.size() - 2);
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<ComparisonRow> compare(const std::vector<std::string>& instances, const CompareOptions& options) {
    std::vector<std::string> ids;
    for (const auto& text : instances) {
        for (auto& s : expand_family(text)) {
            ids.push_back(std::move(s));
        }
    }
    std::vector<ComparisonRow> rows(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < ids.size();) {
            try {
                Instance inst = load_instance(ids[i]);
                rows[i] = compare_row(inst.id, inst.graph, options);
            } catch (const std::exception& e) {
                rows[i].id = ids[i];
                rows[i].error = e.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(ids.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    return rows;
}

const std::vector<std::string>& comparison_columns(bool timings) {
    static const std::vector<std::string> base = {
        "id",           "n",           "m",                "girth",           "mu",
        "l",            "lambda_max",  "predicted_dqi",    "simulated_dqi",   "optimal_degree_l",
        "qfs_baseline", "classical_opt", "classical_method", "spanning_tree_cut", "tree_parts",
        "formula_exact", "error"};
    static const std::vector<std::string> timed = [] {
        auto v = base;
        v.push_back("seconds");
        return v;
    }();
    return timings ? timed : base;
}

namespace {

// Quotes a CSV field when it holds a delimiter or quote.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows, const RunConfig& config,
                          bool timings) {
    out << "# run_config: " << to_json(config).dump() << '\n';
    const auto& cols = comparison_columns(timings);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << '\n';
    for (const auto& r : rows) {
        std::vector<std::string> f = {csv_field(r.id),
                                      std::to_string(r.n),
                                      std::to_string(r.m),
                                      r.girth.str(),
                                      std::to_string(r.mu),
                                      std::to_string(r.l),
                                      fmt_real(r.lambda_max),
                                      fmt_real(r.predicted_dqi),
                                      fmt_opt(r.simulated_dqi),
                                      fmt_opt(r.optimal_degree_l),
                                      fmt_opt(r.qfs_baseline),
                                      fmt_opt(r.classical_opt),
                                      r.classical_method,
                                      fmt_real(r.spanning_tree_cut),
                                      std::to_string(r.tree_parts),
                                      r.formula_exact ? "true" : "false",
                                      csv_field(r.error)};
        if (timings) {
            f.push_back(fmt_real(r.seconds));
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            out << (i ? "," : "") << f[i];
        }
        out << '\n';
    }
}

json comparison_json(const std::vector<ComparisonRow>& rows, const RunConfig& config, bool timings) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j = {{"id", r.id},
                  {"n", r.n},
                  {"m", r.m},
                  {"girth", ext_json(r.girth)},
                  {"mu", r.mu},
                  {"l", r.l},
                  {"lambda_max", round15(r.lambda_max)},
                  {"predicted_dqi", round15(r.predicted_dqi)},
                  {"simulated_dqi", opt_json(r.simulated_dqi)},
                  {"optimal_degree_l", opt_json(r.optimal_degree_l)},
                  {"qfs_baseline", opt_json(r.qfs_baseline)},
                  {"classical_opt", opt_json(r.classical_opt)},
                  {"classical_method", r.classical_method},
                  {"spanning_tree_cut", round15(r.spanning_tree_cut)},
                  {"tree_parts", r.tree_parts},
                  {"formula_exact", r.formula_exact},
                  {"error", r.error}};
        if (timings) {
            j["seconds"] = r.seconds;
        }
        arr.push_back(std::move(j));
    }
    return {{"config", to_json(config)}, {"rows", arr}};
}

std::vector<LambdaSweepRow> lambda_sweep(long long m_first, long long m_last, long long step, int divisor) {
    if (m_first < 1 || m_last < m_first || step < 1 || divisor < 1) {
        throw std::invalid_argument("lambda sweep needs 1 <= first <= last, step >= 1, divisor >= 1");
    }
    std::vector<LambdaSweepRow> rows;
    for (long long m = m_first; m <= m_last; m += step) {
        LambdaSweepRow r;
        r.m = m;
        r.l = static_cast<int>(m / divisor);
        r.lambda_a = lambda_max_tridiag(TridiagonalSpec::dqi(m, r.l)).lambda;
        r.lambda_b = lambda_max_tridiag(HermiteComparator::make(r.l)).lambda;
        r.ratio = r.l > 0 ? r.lambda_a / std::sqrt(static_cast<double>(m) * r.l) : 0.0;
        r.comparison_bound = r.lambda_a <= std::sqrt(static_cast<double>(m)) * r.lambda_b * (1 + 1e-12);
        r.hermite_bound = r.lambda_b <= 2 * std::sqrt(2.0) * std::sqrt(static_cast<double>(r.l));
        rows.push_back(r);
    }
    return rows;
}

void write_lambda_csv(std::ostream& out, const std::vector<LambdaSweepRow>& rows, const RunConfig& config) {
    out << "# run_config: " << to_json(config).dump() << '\n';
    out << "m,l,lambda_max_A,lambda_max_B,sqrt_m_lambda_B,ratio_sqrt_ml,comparison_bound,hermite_bound\n";
    for (const auto& r : rows) {
        out << r.m << ',' << r.l << ',' << fmt_real(r.lambda_a) << ',' << fmt_real(r.lambda_b) << ','
            << fmt_real(std::sqrt(static_cast<double>(r.m)) * r.lambda_b) << ',' << fmt_real(r.ratio) << ','
            << (r.comparison_bound ? "true" : "false") << ',' << (r.hermite_bound ? "true" : "false") << '\n';
    }
}

}  // namespace dqimc

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

// Command-line front end: gen, analyze, simulate, decode, solve, compare.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dqimc/generators.h"
#include "dqimc/harness.h"
#include "dqimc/parity.h"

namespace {

using namespace dqimc;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3, kInfeasible = 4 };

struct InputArgs {
    std::string file;
    std::string gen;
};

void add_input(CLI::App* sub, InputArgs& in) {
    sub->add_option("graph", in.file, "Edge-list file");
    sub->add_option("--gen", in.gen, "Generator spec, e.g. cycle:6, theta:3,3,4, petersen");
}

Instance resolve(const InputArgs& in) {
    if (!in.gen.empty() && !in.file.empty()) {
        throw CLI::ValidationError("give either a graph file or --gen, not both");
    }
    if (!in.gen.empty()) {
        return generated_instance(in.gen);
    }
    if (in.file.empty()) {
        throw CLI::ValidationError("missing input: pass a graph file or --gen SPEC");
    }
    return {in.file, read_edge_list_file(in.file)};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
    f << text;
}

int fail(int code, const std::string& kind, const std::string& message, const std::string& budget = {}) {
    json err = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
    if (!budget.empty()) {
        err["error"]["budget"] = budget;
    }
    std::cerr << err.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DQI-versus-classical MaxCut toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--seed", config.seed, "RNG seed recorded in every output");
    app.add_option("--budget-assignments", config.budgets.assignment_log2, "log2 of max enumerated assignments");
    app.add_option("--budget-syndromes", config.budgets.syndrome_log2, "log2 of max enumerated syndromes");
    app.add_option("--budget-statevector", config.budgets.statevector_log2, "log2 of max state-vector length");
    app.add_option("--budget-tset", config.budgets.max_tset, "max T-set size for matching");
    app.add_option("--budget-fpt", config.budgets.fpt_log2, "log2 of max FPT anchor assignments");
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out,-o", config.out, "Output path (stdout when omitted)");

    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    std::string gen_spec;
    gen->add_option("spec", gen_spec, "Generator spec")->required();

    InputArgs analyze_in;
    auto* analyze = app.add_subcommand("analyze", "Girth, degree, eigenpair and predicted DQI expectation");
    add_input(analyze, analyze_in);
    int cap = kAnalysisCap;
    analyze->add_option("--cap", cap, "Upper bound on the polynomial degree");

    InputArgs sim_in;
    SimulateOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "Exact DQI output distribution by two independent paths");
    add_input(simulate, sim_in);
    simulate->add_option("--l", sim_opts.degree, "Force the polynomial degree");
    simulate->add_option("--samples", sim_opts.samples, "Number of sampled cuts");
    simulate->add_flag("--amplitudes", sim_opts.amplitudes, "Include the normalized state vector");

    InputArgs dec_in;
    std::optional<int> dec_l;
    std::string alpha_hex, beta_hex;
    auto* decode = app.add_subcommand("decode", "Recover the subgraph with a given parity vector");
    add_input(decode, dec_in);
    decode->add_option("--l", dec_l, "Max subgraph size (default: injectivity radius)");
    auto* alpha_opt = decode->add_option("--alpha", alpha_hex, "Parity vector as hex (bit i = vertex i)");
    auto* beta_opt = decode->add_option("--beta", beta_hex, "Edge set as hex; decodes its own parity vector");
    alpha_opt->excludes(beta_opt);

    InputArgs solve_in;
    std::string method = "auto";
    bool solve_timings = false;
    auto* solve = app.add_subcommand("solve", "Classical MaxCut");
    add_input(solve, solve_in);
    solve->add_option("--method", method, "auto|brute|fpt|tree")
        ->check(CLI::IsMember({"auto", "brute", "fpt", "tree"}));
    solve->add_flag("--timings", solve_timings, "Include wall-clock time (breaks byte-identical reruns)");

    std::vector<std::string> instances;
    std::string list_file, sweep;
    CompareOptions cmp;
    int divisor = 10;
    auto* compare_cmd = app.add_subcommand("compare", "DQI vs classical comparison table");
    compare_cmd->add_option("instances", instances, "Generator specs (ranges like cycle:4..16) or edge-list files");
    compare_cmd->add_option("--list", list_file, "File with one instance per line");
    compare_cmd->add_option("--jobs", cmp.jobs, "Rows evaluated concurrently");
    compare_cmd->add_flag("--timings", cmp.timings, "Add a seconds column (breaks byte-identical reruns)");
    compare_cmd->add_option("--lambda-sweep", sweep, "FIRST:LAST:STEP over m; analysis only");
    compare_cmd->add_option("--l-divisor", divisor, "l = floor(m / divisor) in the lambda sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) {
            config.command = "gen";
            config.inputs = {gen_spec};
            Instance inst = generated_instance(gen_spec);
            std::ostringstream os;
            os << "# " << inst.id << " seed=" << config.seed << '\n';
            write_edge_list(os, inst.graph);
            emit(os.str(), config.out);
            return kOk;
        }
        if (*analyze) {
            Instance inst = resolve(analyze_in);
            config.command = "analyze";
            config.inputs = {inst.id};
            config.params = {{"cap", cap}};
            emit(run_analyze(inst.graph, config).dump(2) + "\n", config.out);
            return kOk;
        }
        if (*simulate) {
            Instance inst = resolve(sim_in);
            config.command = "simulate";
            config.inputs = {inst.id};
            config.params = {{"samples", sim_opts.samples}, {"amplitudes", sim_opts.amplitudes}};
            config.params["l"] = sim_opts.degree ? json(*sim_opts.degree) : json(nullptr);
            emit(run_simulate(inst.graph, sim_opts, config).dump(2) + "\n", config.out);
            return kOk;
        }
        if (*decode) {
            Instance inst = resolve(dec_in);
            config.command = "decode";
            config.inputs = {inst.id};
            int l;
            if (dec_l) {
                l = *dec_l;
            } else {
                ExtCount r = injectivity_radius(inst.graph);
                l = r.is_infinite() ? inst.graph.num_edges() : static_cast<int>(r.value());
            }
            std::string alpha = alpha_hex;
            std::optional<EdgeVector> beta;
            if (!beta_hex.empty()) {
                beta = EdgeVector(BitVector::from_hex(static_cast<std::size_t>(inst.graph.num_edges()), beta_hex));
                alpha = parity_map(inst.graph, *beta).to_hex();
            } else if (alpha.empty()) {
                throw CLI::ValidationError("decode needs --alpha or --beta");
            }
            config.params = {{"l", l}, {"alpha", alpha}};
            json out = run_decode(inst.graph, l, alpha, config);
            if (beta) {
                out["input_beta"] = beta->to_hex();
                out["roundtrip"] = out["beta"] == beta->to_hex();
            }
            emit(out.dump(2) + "\n", config.out);
            return kOk;
        }
        if (*solve) {
            Instance inst = resolve(solve_in);
            config.command = "solve";
            config.inputs = {inst.id};
            config.params = {{"method", method}};
            emit(run_solve(inst.graph, method, config, solve_timings).dump(2) + "\n", config.out);
            return kOk;
        }
        if (*compare_cmd) {
            config.command = "compare";
            cmp.budgets = config.budgets;
            if (!sweep.empty()) {
                long long first = 0, last = 0, step = 0;
                char c1 = 0, c2 = 0;
                std::istringstream ss(sweep);
                if (!(ss >> first >> c1 >> last >> c2 >> step) || c1 != ':' || c2 != ':') {
                    throw CLI::ValidationError("--lambda-sweep expects FIRST:LAST:STEP");
                }
                config.params = {{"lambda_sweep", sweep}, {"l_divisor", divisor}};
                auto rows = lambda_sweep(first, last, step, divisor);
                std::ostringstream os;
                if (config.format == "json") {
                    json arr = json::array();
                    for (const auto& r : rows) {
                        arr.push_back({{"m", r.m},
                                       {"l", r.l},
                                       {"lambda_max_A", round15(r.lambda_a)},
                                       {"lambda_max_B", round15(r.lambda_b)},
                                       {"ratio_sqrt_ml", round15(r.ratio)},
                                       {"comparison_bound", r.comparison_bound},
                                       {"hermite_bound", r.hermite_bound}});
                    }
                    os << json{{"config", to_json(config)}, {"rows", arr}}.dump(2) << '\n';
                } else {
                    write_lambda_csv(os, rows, config);
                }
                emit(os.str(), config.out);
                return kOk;
            }
            if (!list_file.empty()) {
                std::ifstream in(list_file);
                if (!in) {
                    throw std::runtime_error("cannot open '" + list_file + "'");
                }
                for (std::string line; std::getline(in, line);) {
                    auto hash = line.find('#');
                    line = line.substr(0, hash);
                    auto b = line.find_first_not_of(" \t\r");
                    auto e = line.find_last_not_of(" \t\r");
                    if (b != std::string::npos) {
                        instances.push_back(line.substr(b, e - b + 1));
                    }
                }
            }
            if (instances.empty()) {
                throw CLI::ValidationError("compare needs at least one instance");
            }
            config.inputs = instances;
            config.params = {{"jobs", cmp.jobs}, {"timings", cmp.timings}};
            auto rows = compare(instances, cmp);
            std::ostringstream csv;
            write_comparison_csv(csv, rows, config, cmp.timings);
            std::string full = comparison_json(rows, config, cmp.timings).dump(2) + "\n";
            if (config.format == "csv") {
                emit(csv.str(), config.out);
                if (!config.out.empty()) {
                    emit(full, config.out + ".json");
                }
            } else {
                emit(full, config.out);
            }
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        return fail(kUsage, "usage", e.what());
    } catch (const BudgetExceeded& e) {
        return fail(kBudget, "budget", e.what(), e.budget());
    } catch (const Infeasible& e) {
        return fail(kInfeasible, "infeasible", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(kUsage, "invalid_input", e.what());
    } catch (const std::exception& e) {
        return fail(kFailure, "error", e.what());
    }
    return kUsage;
}

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

#include <sstream>

#include "doctest.h"
#include "dqimc/generators.h"
#include "dqimc/harness.h"

using namespace dqimc;

namespace {

RunConfig config_for(const std::string& command) {
    RunConfig c;
    c.command = command;
    c.seed = 1;
    return c;
}

}  // namespace

TEST_CASE("family expansion") {
    CHECK(expand_family("cycle:4..6") == std::vector<std::string>{"cycle:4", "cycle:5", "cycle:6"});
    CHECK(expand_family("tree_plus_chords:50,0..4/2,1") ==
          std::vector<std::string>{"tree_plus_chords:50,0,1", "tree_plus_chords:50,2,1", "tree_plus_chords:50,4,1"});
    CHECK(expand_family("petersen") == std::vector<std::string>{"petersen"});
    CHECK(expand_family("some/file.txt") == std::vector<std::string>{"some/file.txt"});
    CHECK_THROWS(expand_family("theta:1..2,3..4,5"));
}

TEST_CASE("instances") {
    auto inst = load_instance("theta:2,3,4");
    CHECK(inst.id == "theta:2,3,4");
    CHECK(inst.graph.num_vertices() == 2 + 1 + 2 + 3);
    CHECK(inst.graph.num_edges() == 9);
    CHECK_THROWS(load_instance("no_such_generator_or_file"));
}

TEST_CASE("analyze output") {
    json j = run_analyze(cycle_graph(6), config_for("analyze"));
    CHECK(j.contains("config"));
    CHECK(j["plan"]["l"] == 2);
    CHECK(j["plan"]["lambda_max"].get<double>() == doctest::Approx(4.0));
    CHECK(j["plan"]["predicted_expected_cut"].get<double>() == doctest::Approx(5.0));
    // Reruns are byte-identical.
    CHECK(j.dump() == run_analyze(cycle_graph(6), config_for("analyze")).dump());
}

TEST_CASE("simulate output") {
    json j = run_simulate(cycle_graph(3), SimulateOptions{}, config_for("simulate"));
    CHECK(j["paths_agree"] == true);
    CHECK(j["histogram_path"]["expected_cut"].get<double>() == doctest::Approx(1 + std::sqrt(3.0) / 2));
    CHECK(j["optimal_degree_l"]["expected_cut"].get<double>() == doctest::Approx(2.0));
    CHECK(j["qfs_baseline"].get<double>() == doctest::Approx(2.0));
    CHECK(j.contains("deficit"));
    json k = run_simulate(cycle_graph(6), SimulateOptions{}, config_for("simulate"));
    CHECK_FALSE(k.contains("deficit"));
}

TEST_CASE("decode output") {
    json j = run_decode(cycle_graph(6), 2, "05", config_for("decode"));
    CHECK(j["size"] == 2);
    CHECK(j["parity_check"] == true);
    CHECK_THROWS_AS(run_decode(cycle_graph(6), 2, "09", config_for("decode")), Infeasible);
}

TEST_CASE("solve output") {
    json j = run_solve(petersen_graph(), "auto", config_for("solve"), false);
    CHECK(j["result"]["value"].get<double>() == 12.0);
    CHECK_FALSE(j["result"].contains("elapsed_seconds"));
    CHECK(run_solve(petersen_graph(), "fpt", config_for("solve"), false)["result"]["value"].get<double>() == 12.0);
    CHECK_THROWS(run_solve(petersen_graph(), "magic", config_for("solve"), false));
}

TEST_CASE("comparison rows") {
    CompareOptions opts;
    auto rows = compare({"cycle:6", "cycle:3", "petersen", "path:5"}, opts);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].id == "cycle:6");
    CHECK(rows[0].predicted_dqi == doctest::Approx(5.0));
    CHECK(rows[0].classical_opt == 6.0);
    CHECK(rows[0].formula_exact);
    CHECK(rows[1].simulated_dqi.value() == doctest::Approx(1 + std::sqrt(3.0) / 2));
    CHECK_FALSE(rows[1].formula_exact);
    CHECK(rows[2].classical_opt == 12.0);
    CHECK(rows[2].mu == 6);
    CHECK(rows[3].girth.is_infinite());
    for (const auto& r : rows) {
        CHECK(r.error.empty());
    }

    opts.jobs = 4;
    auto parallel = compare({"cycle:6", "cycle:3", "petersen", "path:5"}, opts);
    std::ostringstream a, b;
    write_comparison_csv(a, rows, config_for("compare"), false);
    write_comparison_csv(b, parallel, config_for("compare"), false);
    CHECK(a.str() == b.str());
}

TEST_CASE("comparison CSV layout") {
    CompareOptions opts;
    auto rows = compare({"cycle:6"}, opts);
    std::ostringstream out;
    write_comparison_csv(out, rows, config_for("compare"), false);
    std::istringstream in(out.str());
    std::string first, header, row;
    std::getline(in, first);
    std::getline(in, header);
    std::getline(in, row);
    CHECK(first.rfind("# run_config: ", 0) == 0);
    CHECK(json::parse(first.substr(14))["command"] == "compare");
    CHECK(header ==
          "id,n,m,girth,mu,l,lambda_max,predicted_dqi,simulated_dqi,optimal_degree_l,qfs_baseline,classical_opt,"
          "classical_method,spanning_tree_cut,tree_parts,formula_exact,error");
    CHECK(row.rfind("cycle:6,6,6,6,1,2,4,5,5,", 0) == 0);
    CHECK(comparison_columns(true).back() == "seconds");

    json j = comparison_json(rows, config_for("compare"), false);
    CHECK(j["rows"].size() == 1);
    CHECK(j["rows"][0]["classical_opt"].get<double>() == 6.0);
}

TEST_CASE("lambda sweep") {
    auto rows = lambda_sweep(100, 1000, 100, 10);
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        CHECK(r.l == r.m / 10);
        CHECK(r.comparison_bound);
        CHECK(r.hermite_bound);
        CHECK(r.ratio <= 2 * std::sqrt(2.0));
    }
    std::ostringstream out;
    write_lambda_csv(out, rows, config_for("compare"));
    CHECK(out.str().find("m,l,") != std::string::npos);
}

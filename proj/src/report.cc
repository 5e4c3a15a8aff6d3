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

#include "dqimc/report.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dqimc {

double round15(double x) {
    if (!std::isfinite(x) || x == 0) {
        return x;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return std::strtod(buf, nullptr);
}

json ext_json(const ExtCount& c) {
    if (c.is_infinite()) {
        return "inf";
    }
    return c.value();
}

namespace {

json real_array(const std::vector<double>& xs) {
    json a = json::array();
    for (double x : xs) {
        a.push_back(round15(x));
    }
    return a;
}

}  // namespace

json to_json(const Budgets& b) {
    return {{"assignment_log2", b.assignment_log2},
            {"syndrome_log2", b.syndrome_log2},
            {"statevector_log2", b.statevector_log2},
            {"max_tset", b.max_tset},
            {"fpt_log2", b.fpt_log2}};
}

json to_json(const RunConfig& c) {
    return {{"command", c.command}, {"seed", c.seed},     {"budgets", to_json(c.budgets)},
            {"inputs", c.inputs},   {"format", c.format}, {"out", c.out},
            {"params", c.params}};
}

json to_json(const Girth& g) {
    return {{"length", ext_json(g.length)}, {"witness", g.witness}};
}

json to_json(const DqiPlan& p) {
    return {{"n", p.n},
            {"m", p.m},
            {"girth", to_json(p.girth)},
            {"cap", p.cap},
            {"l", p.l},
            {"lambda_max", round15(p.lambda_max)},
            {"eigvec", real_array(p.eigvec)},
            {"coeffs", real_array(p.coeffs)},
            {"predicted_expected_cut", round15(p.predicted_expected_cut)},
            {"formula_exact", p.formula_exact}};
}

json to_json(const CutHistogram& h) {
    json sparse = json::object();
    for (std::size_t j = 0; j < h.counts.size(); ++j) {
        if (h.counts[j]) {
            sparse[std::to_string(j)] = h.counts[j];
        }
    }
    return sparse;
}

json to_json(const SimulationReport& r) {
    json dist = json::object();
    for (std::size_t j = 0; j < r.distribution.size(); ++j) {
        if (r.distribution[j] > 0) {
            dist[std::to_string(j)] = round15(r.distribution[j]);
        }
    }
    json out = {{"method", r.method},
                {"expected_cut", round15(r.expected_cut)},
                {"histogram", to_json(r.histogram)},
                {"distribution", dist}};
    if (r.amplitudes) {
        out["amplitudes"] = real_array(*r.amplitudes);
    }
    json samples = json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"z", s.sides.to_bitstring()}, {"value", round15(s.value)}});
    }
    out["samples"] = samples;
    return out;
}

json to_json(const MaxCutResult& r, bool with_timing) {
    json out = {{"method", r.method},
                {"value", round15(r.value)},
                {"assignment", r.assignment.sides.to_bitstring()},
                {"assignment_hex", r.assignment.sides.to_hex()}};
    if (with_timing) {
        out["elapsed_seconds"] = r.elapsed_seconds;
    }
    return out;
}

json to_json(const TreePartition& p) {
    return {{"t", p.parts.size()},      {"parts", p.parts},
            {"depth", ext_json(p.depth)}, {"girth", ext_json(p.girth)},
            {"cross_edges", p.cross_edges}, {"roots", p.roots},
            {"degenerate", p.degenerate}};
}

json to_json(const MuCertificate& c) {
    return {{"mu", c.mu},
            {"mu_per_component", c.mu_per_component},
            {"girth", ext_json(c.girth)},
            {"non_tree_edges", c.non_tree_edges},
            {"bound_check", c.bound_check}};
}

}  // namespace dqimc

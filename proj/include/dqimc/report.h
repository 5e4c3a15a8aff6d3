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

#ifndef DQIMC_REPORT_H
#define DQIMC_REPORT_H

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dqimc/common.h"
#include "dqimc/dqi_plan.h"
#include "dqimc/maxcut.h"
#include "dqimc/simulator.h"
#include "dqimc/tjoin.h"
#include "dqimc/tree_partition.h"

namespace dqimc {

using nlohmann::json;

/// Rounds to 15 significant digits, so JSON renders at most that many.
double round15(double x);
/// Integer for finite counts, the string "inf" otherwise.
json ext_json(const ExtCount& c);

/// Subcommand parameters recorded in every output.
struct RunConfig {
    std::string command;
    std::uint64_t seed = 0;
    Budgets budgets;
    std::vector<std::string> inputs;
    std::string format = "json";
    std::string out;
    json params = json::object();
};

json to_json(const Budgets& b);
json to_json(const RunConfig& c);
json to_json(const Girth& g);
json to_json(const DqiPlan& p);
json to_json(const CutHistogram& h);
json to_json(const SimulationReport& r);
json to_json(const MaxCutResult& r, bool with_timing);
json to_json(const TreePartition& p);
json to_json(const MuCertificate& c);

}  // namespace dqimc

#endif

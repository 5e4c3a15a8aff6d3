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

#ifndef DQIMC_CUT_H
#define DQIMC_CUT_H

#include "dqimc/bitvec.h"
#include "dqimc/graph.h"

namespace dqimc {

/// A vertex 2-coloring (bit v set means z_v = -1) with its cut value.
struct CutAssignment {
    VertexVector sides;
    double value = 0;
};

/// Number of edges whose endpoints lie on different sides.
int cut_size(const Graph& graph, const VertexVector& sides);
/// Total weight of cut edges (equals cut_size on unweighted graphs).
double cut_weight(const Graph& graph, const VertexVector& sides);

}  // namespace dqimc

#endif

// Copyright 2026 The bhcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BHCUT_SERIALIZE_HPP_
#define BHCUT_SERIALIZE_HPP_

#include <string>

#include "json.hpp"

#include "bhcut/analysis.hpp"
#include "bhcut/constructions.hpp"
#include "bhcut/solver.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

// "index: idx1 idx2 ..." per vertex, neighbors ascending.
std::string adjacency_text(const CubeGraph& g);
// {n, vertices, edges, edge_dims}; vertices in text form, edges as [u, v].
Json graph_json(const CubeGraph& g);
// Header "u,v,dim" then one row per edge.
std::string edges_csv(const CubeGraph& g);

Json to_json(const ComponentReport& report);
Json to_json(const CutVerdict& verdict);
// elapsed_ms is null unless `timing` is set, keeping reports reproducible.
Json to_json(const SolverResult& result, bool timing = false);
Json to_json(const UpperBoundCertificate& cert);
Json to_json(const AnomalyReport& report);
Json to_json(const LiftReport& report);

}  // namespace bhcut

#endif  // BHCUT_SERIALIZE_HPP_

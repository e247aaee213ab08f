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

#include "bhcut/serialize.hpp"

#include <sstream>

namespace bhcut {

std::string adjacency_text(const CubeGraph& g) {
  std::ostringstream out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out << v << ':';
    for (VertexIndex u : g.neighbors(v)) out << ' ' << u;
    out << '\n';
  }
  return out.str();
}

Json graph_json(const CubeGraph& g) {
  Json j;
  j["n"] = g.dimension();
  Json vertices = Json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex(v).to_string());
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  Json dims = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json::array({e.u, e.v}));
    dims.push_back(e.dim);
  }
  j["edges"] = std::move(edges);
  j["edge_dims"] = std::move(dims);
  return j;
}

std::string edges_csv(const CubeGraph& g) {
  std::ostringstream out;
  out << "u,v,dim\n";
  for (const Edge& e : g.edges()) out << e.u << ',' << e.v << ',' << e.dim << '\n';
  return out.str();
}

Json to_json(const ComponentReport& report) {
  Json j;
  j["connected"] = report.connected;
  j["fault_size"] = report.fault_size;
  Json comps = Json::array();
  for (const Component& c : report.components) {
    Json item;
    item["size"] = c.size();
    item["min_degree"] = c.min_degree;
    item["vertices"] = c.vertices;
    comps.push_back(std::move(item));
  }
  j["components"] = std::move(comps);
  return j;
}

Json to_json(const CutVerdict& verdict) {
  Json j;
  j["is_cut"] = verdict.is_cut;
  j["kind"] = cut_kind_name(verdict.spec.kind);
  j["param"] = verdict.spec.param;
  j["failing_component"] = verdict.failing_component ? Json(*verdict.failing_component) : Json();
  j["failing_value"] = verdict.failing_value ? Json(*verdict.failing_value) : Json();
  return j;
}

Json to_json(const SolverResult& result, bool timing) {
  Json j;
  j["kind"] = cut_kind_name(result.spec.kind);
  j["param"] = result.spec.param;
  j["n"] = result.n;
  j["bound"] = result.bound;
  j["value"] = result.value ? Json(*result.value) : Json();
  j["witness"] = result.witness ? Json(*result.witness) : Json();
  Json coverage;
  coverage["sizes_searched"] = result.coverage.sizes_searched;
  coverage["subsets_examined"] = result.coverage.subsets_examined;
  coverage["quotient_used"] = result.coverage.quotient_used;
  coverage["universe"] = result.coverage.universe;
  j["coverage"] = std::move(coverage);
  j["elapsed_ms"] = timing ? Json(result.elapsed_ms) : Json();
  return j;
}

Json to_json(const UpperBoundCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["cut_size"] = cert.cut_size;
  Json comps = Json::array();
  for (const ComponentSummary& c : cert.components) {
    Json item;
    item["size"] = c.size;
    item["min_degree"] = c.min_degree;
    item["degree_two_vertices"] = c.degree_two_vertices;
    item["contains_T"] = c.contains_tee;
    comps.push_back(std::move(item));
  }
  j["components"] = std::move(comps);
  j["verdict"] = cert.verdict;
  j["expected_verdict"] = cert.expected_verdict;
  if (!cert.anomaly_vertices.empty()) {
    Json anomaly = Json::array();
    for (const Vertex& v : cert.anomaly_vertices) anomaly.push_back(v.to_string());
    j["anomaly_vertices"] = std::move(anomaly);
  }
  Json checks;
  checks["expected_cut_size"] = cert.expected_cut_size;
  checks["cut_equals_neighborhood"] = cert.cut_equals_neighborhood;
  checks["T_partner_closed"] = cert.tee_partner_closed;
  checks["cut_partner_closed"] = cert.cut_partner_closed;
  checks["T_induced_4_regular"] = cert.tee_induced_four_regular;
  checks["restricted3_cut"] = cert.restricted3_cut;
  checks["restricted4_cut"] = cert.restricted4_cut;
  checks["anomaly_as_expected"] = cert.anomaly_as_expected;
  j["checks"] = std::move(checks);
  j["notes"] = cert.notes;
  j["ok"] = cert.ok();
  return j;
}

Json to_json(const AnomalyReport& report) {
  Json j;
  j["n"] = report.n;
  j["family"] = report.family;
  Json claims = Json::array();
  for (const AdjacencyClaim& c : report.claims) {
    claims.push_back(Json{{"from", c.from}, {"to", c.to}, {"adjacent", c.holds}});
  }
  j["claims"] = std::move(claims);
  j["c_partners"] = report.c_partners;
  j["d_partners"] = report.d_partners;
  j["notes"] = report.notes;
  j["ok"] = report.ok();
  return j;
}

Json to_json(const LiftReport& report) {
  Json j;
  j["exhaustive"] = report.exhaustive;
  j["subsets_checked"] = report.subsets_checked;
  j["verdicts_compared"] = report.verdicts_compared;
  j["cuts_seen"] = report.cuts_seen;
  Json mismatches = Json::array();
  for (const LiftMismatch& m : report.mismatches) {
    Json item;
    item["classes"] = m.classes;
    item["kind"] = cut_kind_name(m.spec.kind);
    item["param"] = m.spec.param;
    item["quotient_verdict"] = m.quotient_verdict;
    item["direct_verdict"] = m.direct_verdict;
    mismatches.push_back(std::move(item));
  }
  j["mismatches"] = std::move(mismatches);
  j["sound"] = report.sound();
  return j;
}

}  // namespace bhcut

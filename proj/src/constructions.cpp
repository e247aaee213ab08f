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

#include "bhcut/constructions.hpp"

#include <algorithm>
#include <array>

#include "bhcut/error.hpp"

namespace bhcut {
namespace {

struct Row {
  const char* name;
  std::array<int, 3> head;
};

constexpr std::array<Row, 12> kTee = {{
    {"a", {0, 0, 0}},   {"a'", {2, 0, 0}},   {"a_1", {1, 0, 0}},  {"a_1'", {3, 0, 0}},
    {"a_2", {0, 3, 0}}, {"b'", {2, 3, 0}},   {"b", {1, 0, 1}},    {"a_2'", {3, 0, 1}},
    {"b_1", {0, 3, 1}}, {"b_2'", {2, 3, 1}}, {"b_2", {1, 3, 1}},  {"b_1'", {3, 3, 1}},
}};

constexpr std::array<Row, 12> kInnerBoundary = {{
    {"x", {1, 1, 0}}, {"x'", {3, 1, 0}}, {"y", {1, 3, 0}}, {"y'", {3, 3, 0}},
    {"z", {0, 0, 3}}, {"z'", {2, 0, 3}}, {"u", {0, 0, 1}}, {"u'", {2, 0, 1}},
    {"v", {0, 2, 1}}, {"v'", {2, 2, 1}}, {"w", {1, 3, 2}}, {"w'", {3, 3, 2}},
}};

// Outer family i: these heads, then `tail` at coordinate i+2.
struct OuterRow {
  const char* stem;
  bool primed;
  std::array<int, 3> head;
  int tail;
};

constexpr std::array<OuterRow, 12> kOuterFamily = {{
    {"x", false, {1, 0, 0}, 1}, {"x", true, {3, 0, 0}, 1},
    {"y", false, {1, 3, 0}, 1}, {"y", true, {3, 3, 0}, 1},
    {"z", false, {1, 3, 1}, 1}, {"z", true, {3, 3, 1}, 1},
    {"u", false, {0, 0, 0}, 3}, {"u", true, {2, 0, 0}, 3},
    {"v", false, {0, 0, 1}, 3}, {"v", true, {2, 0, 1}, 3},
    {"w", false, {0, 3, 1}, 3}, {"w", true, {2, 3, 1}, 3},
}};

constexpr const char* kDPrimeNote =
    "d_2' uses (3,0,1,0,3), the partner of d_2; the printed list repeats d_2 = (1,0,1,0,3)";

std::vector<int> pad(const std::array<int, 3>& head, int n) {
  std::vector<int> coords(static_cast<std::size_t>(n), 0);
  std::copy(head.begin(), head.end(), coords.begin());
  return coords;
}

std::string family_name(const char* stem, int family, bool primed) {
  return std::string(stem) + "_" + std::to_string(family) + (primed ? "'" : "");
}

void require_at_least_three(int n) {
  if (n < 3) throw Error(ErrorCode::kParameter, "construction needs n >= 3");
}

std::vector<VertexIndex> indices_of(const CubeGraph& g, const std::vector<Vertex>& vs) {
  std::vector<VertexIndex> out;
  out.reserve(vs.size());
  for (const Vertex& v : vs) out.push_back(g.index_of(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConstructionFamily construction_family(int n) {
  require_at_least_three(n);
  ConstructionFamily family;
  family.n = n;
  for (const Row& row : kTee) family.tee.push_back({row.name, Vertex(pad(row.head, n))});
  for (const Row& row : kInnerBoundary) {
    family.inner_boundary.push_back({row.name, Vertex(pad(row.head, n))});
  }
  for (int i = 1; i <= n - 3; ++i) {
    std::vector<NamedVertex> outer;
    for (const OuterRow& row : kOuterFamily) {
      auto coords = pad(row.head, n);
      coords[static_cast<std::size_t>(i + 2)] = row.tail;
      outer.push_back({family_name(row.stem, i, row.primed), Vertex(std::move(coords))});
    }
    family.outer_families.push_back(std::move(outer));
  }
  return family;
}

std::vector<Vertex> build_T(int n) {
  std::vector<Vertex> out;
  for (auto& nv : construction_family(n).tee) out.push_back(std::move(nv.vertex));
  return out;
}

std::vector<Vertex> build_cut_vertices(int n) {
  auto family = construction_family(n);
  std::vector<Vertex> out;
  for (auto& nv : family.inner_boundary) out.push_back(std::move(nv.vertex));
  for (auto& outer : family.outer_families) {
    for (auto& nv : outer) out.push_back(std::move(nv.vertex));
  }
  return out;
}

FaultSet build_cut(const CubeGraph& g) {
  return FaultSet(g, indices_of(g, build_cut_vertices(g.dimension())));
}

std::vector<int> induced_degrees(const CubeGraph& g, std::span<const VertexIndex> s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexIndex v : s) in[v] = true;
  std::vector<int> out;
  out.reserve(s.size());
  for (VertexIndex v : s) {
    const auto nbrs = g.neighbors(v);
    out.push_back(static_cast<int>(std::count_if(nbrs.begin(), nbrs.end(),
                                                 [&](VertexIndex u) { return in[u]; })));
  }
  return out;
}

std::vector<NamedVertex> anomaly_vertices(int n, int family) {
  if (n < 4 || family < 1 || family > n - 3) {
    throw Error(ErrorCode::kParameter, "anomaly family needs n >= 4 and 1 <= i <= n-3");
  }
  auto make = [&](std::array<int, 3> head, int tail) {
    auto coords = pad(head, n);
    coords[static_cast<std::size_t>(family + 2)] = tail;
    return Vertex(std::move(coords));
  };
  return {
      {family_name("c", family, false), make({0, 3, 0}, 1)},
      {family_name("c", family, true), make({2, 3, 0}, 1)},
      {family_name("d", family, false), make({1, 0, 1}, 3)},
      {family_name("d", family, true), make({3, 0, 1}, 3)},
  };
}

bool UpperBoundCertificate::ok() const {
  return cut_size == expected_cut_size && cut_equals_neighborhood && tee_partner_closed &&
         cut_partner_closed && tee_induced_four_regular && components.size() == 2 &&
         verdict == expected_verdict && anomaly_as_expected;
}

UpperBoundCertificate verify_upper_bound(const CubeGraph& g) {
  const int n = g.dimension();
  require_at_least_three(n);

  UpperBoundCertificate cert;
  cert.n = n;
  cert.expected_cut_size = static_cast<std::size_t>(12 * n - 24);
  cert.expected_verdict = n == 4 ? "invalid" : "valid";

  const auto tee = indices_of(g, build_T(n));
  const FaultSet cut = build_cut(g);
  cert.cut_size = cut.size();
  cert.cut_equals_neighborhood = neighborhood(g, tee) == cut.members();
  cert.tee_partner_closed = partner_closure_check(g, tee);
  cert.cut_partner_closed = partner_closure_check(g, cut.members());
  const auto tee_degrees = induced_degrees(g, tee);
  cert.tee_induced_four_regular =
      std::all_of(tee_degrees.begin(), tee_degrees.end(), [](int d) { return d == 4; });

  const ComponentReport report = components(g, cut);
  std::vector<VertexIndex> degree_two;
  for (const Component& comp : report.components) {
    ComponentSummary summary;
    summary.size = comp.size();
    summary.min_degree = comp.min_degree;
    summary.contains_tee = std::binary_search(comp.vertices.begin(), comp.vertices.end(), tee[0]);
    const auto degrees = induced_degrees(g, comp.vertices);
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (degrees[j] != 2) continue;
      ++summary.degree_two_vertices;
      if (!summary.contains_tee) degree_two.push_back(comp.vertices[j]);
    }
    cert.components.push_back(summary);
  }
  cert.restricted3_cut = restricted_verdict(report, 3).is_cut;
  cert.restricted4_cut = restricted_verdict(report, 4).is_cut;
  cert.verdict = cert.restricted4_cut ? "valid" : "invalid";

  std::sort(degree_two.begin(), degree_two.end());
  if (n == 4) {
    for (VertexIndex v : degree_two) cert.anomaly_vertices.push_back(g.vertex(v));
    std::vector<VertexIndex> expected;
    for (const auto& nv : anomaly_vertices(4, 1)) expected.push_back(g.index_of(nv.vertex));
    std::sort(expected.begin(), expected.end());
    cert.anomaly_as_expected = degree_two == expected && !cert.restricted3_cut;
  }
  if (n >= 5) cert.notes.emplace_back(kDPrimeNote);
  return cert;
}

bool AnomalyReport::ok() const {
  return c_partners && d_partners &&
         std::all_of(claims.begin(), claims.end(), [](const AdjacencyClaim& c) { return c.holds; });
}

AnomalyReport anomaly_common_neighbors(const CubeGraph& g, int family) {
  const int n = g.dimension();
  const auto special = anomaly_vertices(n, family);
  const auto outer = construction_family(n).outer_families[static_cast<std::size_t>(family - 1)];

  AnomalyReport report;
  report.n = n;
  report.family = family;
  // x, x', y, y', z, z' hang off the c pair; u, ..., w' off the d pair.
  for (std::size_t j = 0; j < outer.size(); ++j) {
    const std::size_t base = j < 6 ? 0 : 2;
    for (std::size_t s = base; s < base + 2; ++s) {
      report.claims.push_back({outer[j].name, special[s].name,
                               g.adjacent(g.index_of(outer[j].vertex),
                                          g.index_of(special[s].vertex))});
    }
  }
  report.c_partners = partner(special[0].vertex) == special[1].vertex;
  report.d_partners = partner(special[2].vertex) == special[3].vertex;
  if (family == 2) report.notes.emplace_back(kDPrimeNote);
  return report;
}

}  // namespace bhcut

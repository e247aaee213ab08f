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

#ifndef BHCUT_CONSTRUCTIONS_HPP_
#define BHCUT_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bhcut/analysis.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

struct NamedVertex {
  std::string name;  // e.g. "a", "b_1'", "x_2"
  Vertex vertex;
};

// The explicit vertex families behind the 12n-24 restricted cut. Tuples are
// stored literally for the first three coordinates and padded with zeros.
struct ConstructionFamily {
  int n = 0;
  std::vector<NamedVertex> tee;             // the 12-vertex set T
  std::vector<NamedVertex> inner_boundary;  // N_H(T) inside the BH_3 subcube
  // outer_families[i-1] holds x_i, x_i', ..., w_i' for i = 1..n-3, with the
  // nonzero entry of family i at coordinate i+2.
  std::vector<std::vector<NamedVertex>> outer_families;
};

// Throws Error(kParameter) for n < 3.
ConstructionFamily construction_family(int n);

std::vector<Vertex> build_T(int n);
// The inner boundary and every outer family, 12n-24 vertices.
std::vector<Vertex> build_cut_vertices(int n);
// build_cut_vertices(g.dimension()) as a fault set of g.
FaultSet build_cut(const CubeGraph& g);

// Degree of each member inside the subgraph induced by `s` (same order).
std::vector<int> induced_degrees(const CubeGraph& g, std::span<const VertexIndex> s);

// c_i, c_i', d_i, d_i' for outer family i (1 <= i <= n-3).
std::vector<NamedVertex> anomaly_vertices(int n, int family);

struct ComponentSummary {
  std::size_t size = 0;
  int min_degree = 0;
  std::size_t degree_two_vertices = 0;
  bool contains_tee = false;
};

struct UpperBoundCertificate {
  int n = 0;
  std::size_t cut_size = 0;
  std::size_t expected_cut_size = 0;   // 12n - 24
  bool cut_equals_neighborhood = false;  // build_cut(n) == N(T)
  bool tee_partner_closed = false;
  bool cut_partner_closed = false;
  bool tee_induced_four_regular = false;
  std::vector<ComponentSummary> components;
  bool restricted3_cut = false;
  bool restricted4_cut = false;
  std::string verdict;           // "valid" when a restricted-4 cut
  std::string expected_verdict;  // "invalid" only for n = 4
  // n = 4: every degree-2 vertex outside T, in index order.
  std::vector<Vertex> anomaly_vertices;
  bool anomaly_as_expected = true;
  std::vector<std::string> notes;

  bool ok() const;
};

// Deletes build_cut(n) from g = BH_n and compares the census with the
// expectation table {3: valid, 4: invalid with four degree-2 vertices,
// >= 5: valid}. Throws Error(kParameter) for n < 3.
UpperBoundCertificate verify_upper_bound(const CubeGraph& g);

struct AdjacencyClaim {
  std::string from;
  std::string to;
  bool holds = false;
};

struct AnomalyReport {
  int n = 0;
  int family = 0;
  std::vector<AdjacencyClaim> claims;
  bool c_partners = false;
  bool d_partners = false;
  std::vector<std::string> notes;

  bool ok() const;
};

// Checks that x_i..z_i' are common neighbors of c_i, c_i' and u_i..w_i' of
// d_i, d_i'. Throws Error(kParameter) unless n >= 4 and 1 <= family <= n-3.
AnomalyReport anomaly_common_neighbors(const CubeGraph& g, int family = 1);

}  // namespace bhcut

#endif  // BHCUT_CONSTRUCTIONS_HPP_

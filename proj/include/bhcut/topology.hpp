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

#ifndef BHCUT_TOPOLOGY_HPP_
#define BHCUT_TOPOLOGY_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhcut {

using VertexIndex = std::uint32_t;

// A vertex of BH_n: a length-n tuple over Z4. Coordinate 0 is the inner
// index, coordinates 1..n-1 are the outer indices.
class Vertex {
 public:
  // Throws Error(kInvalidVertex) on an empty tuple or a coordinate outside
  // {0,1,2,3}.
  explicit Vertex(std::vector<int> coords);

  // Decodes the canonical index (mixed radix 4, coordinate 0 least
  // significant).
  static Vertex from_index(VertexIndex index, int n);

  // Accepts the parenthesized form "(0,3,1)" and the compact digit form
  // "031" (inner index first).
  static Vertex parse(std::string_view text);

  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int inner() const { return coords_.front(); }
  const std::vector<std::uint8_t>& coords() const { return coords_; }

  // 0 for white (even inner index, V_0), 1 for black (odd, V_1).
  int color() const { return coords_.front() & 1; }

  VertexIndex index() const;
  std::string to_string() const;
  std::string to_compact() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  Vertex() = default;
  std::vector<std::uint8_t> coords_;
};

// ((a_0+2) mod 4, a_1, ..., a_{n-1}); shares its whole neighborhood with v.
Vertex partner(const Vertex& v);
VertexIndex partner_index(VertexIndex v);

// The 2n neighbors given by the closed-form adjacency rule, ordered as
// (a_0+1), (a_0-1) for dimension 0, then the same pair for each outer
// dimension i = 1..n-1 with a_i shifted by (-1)^{a_0}.
// Throws Error(kInvalidVertex) when v does not have n coordinates.
std::vector<Vertex> neighbors_direct(const Vertex& v, int n);

struct Edge {
  VertexIndex u;
  VertexIndex v;
  int dim;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct BuildLimits {
  int max_dimension = 10;
};

// Immutable adjacency structure of BH_n. Every vertex has exactly 2n
// neighbors stored in ascending index order next to their dimension tags.
class CubeGraph {
 public:
  // Validates the tables: symmetric, loop-free, 2n-regular, and each
  // neighbor list made of n partner pairs. Throws Error(kInternal) on a
  // violation. Neighbor lists are sorted on the way in.
  static CubeGraph from_adjacency(int n, std::vector<VertexIndex> adjacency,
                                  std::vector<std::uint8_t> dims);

  int dimension() const { return n_; }
  std::size_t vertex_count() const { return vertex_count_; }
  int degree() const { return 2 * n_; }
  std::size_t edge_count() const { return vertex_count_ * static_cast<std::size_t>(n_); }

  std::span<const VertexIndex> neighbors(VertexIndex v) const {
    return {adjacency_.data() + offset(v), static_cast<std::size_t>(degree())};
  }
  std::span<const std::uint8_t> neighbor_dims(VertexIndex v) const {
    return {dims_.data() + offset(v), static_cast<std::size_t>(degree())};
  }

  bool adjacent(VertexIndex u, VertexIndex v) const;
  // Dimension tag of edge uv; -1 when u and v are not adjacent.
  int edge_dim(VertexIndex u, VertexIndex v) const;

  Vertex vertex(VertexIndex v) const { return Vertex::from_index(v, n_); }
  // Throws Error(kInvalidVertex) when the vertex has the wrong dimension.
  VertexIndex index_of(const Vertex& v) const;

  // All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const CubeGraph&, const CubeGraph&) = default;

 private:
  CubeGraph() = default;
  std::size_t offset(VertexIndex v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(degree());
  }

  int n_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<VertexIndex> adjacency_;
  std::vector<std::uint8_t> dims_;
};

// Closed-form construction. Throws Error(kConfiguration) for n < 1 or
// n > limits.max_dimension.
CubeGraph build_direct(int n, const BuildLimits& limits = {});

// Construction from four relabelled copies of BH_{n-1}, starting from the
// 4-cycle 0,1,2,3. Same errors as build_direct.
CubeGraph build_recursive(int n, const BuildLimits& limits = {});

// Four copies of BH_{n-1} keyed by the last outer coordinate.
struct SubcubeSplit {
  std::array<std::vector<VertexIndex>, 4> parts;
  // cross_edges[k] lists the edges between B^k and B^{k+1 mod 4}, oriented
  // from B^k.
  std::array<std::vector<Edge>, 4> cross_edges;
};

// Throws Error(kParameter) for n = 1.
SubcubeSplit split_subcubes(const CubeGraph& g);

// Number of edges with one end in `a` and the other in `b`.
std::size_t count_edges_between(const CubeGraph& g, std::span<const VertexIndex> a,
                                std::span<const VertexIndex> b);

// The subgraph induced on B^k with the last coordinate dropped, as a graph
// of dimension n-1.
CubeGraph subcube_graph(const CubeGraph& g, const SubcubeSplit& split, int k);

struct Bipartition {
  std::vector<VertexIndex> white;  // even inner index
  std::vector<VertexIndex> black;  // odd inner index
};

Bipartition bipartition(const CubeGraph& g);
std::size_t count_monochromatic_edges(const CubeGraph& g);

// The n-th power of four; callers keep n small.
constexpr std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

}  // namespace bhcut

#endif  // BHCUT_TOPOLOGY_HPP_

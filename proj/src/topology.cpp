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

#include "bhcut/topology.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bhcut/error.hpp"

namespace bhcut {

namespace {

// Outer dimensions beyond this would overflow VertexIndex.
constexpr int kMaxIndexableDimension = 15;

void check_dimension(int n, const BuildLimits& limits) {
  if (n < 1 || n > limits.max_dimension || n > kMaxIndexableDimension) {
    throw Error(ErrorCode::kConfiguration,
                "dimension " + std::to_string(n) + " outside supported range 1.." +
                    std::to_string(std::min(limits.max_dimension, kMaxIndexableDimension)));
  }
}

// Offset of coordinate i in the canonical index.
constexpr VertexIndex place(int i) { return VertexIndex{1} << (2 * i); }

constexpr int digit(VertexIndex index, int i) { return static_cast<int>((index >> (2 * i)) & 3u); }

constexpr VertexIndex with_digit(VertexIndex index, int i, int value) {
  return (index & ~(VertexIndex{3} << (2 * i))) |
         (static_cast<VertexIndex>(value & 3) << (2 * i));
}

}  // namespace

Vertex::Vertex(std::vector<int> coords) {
  if (coords.empty()) throw Error(ErrorCode::kInvalidVertex, "vertex has no coordinates");
  coords_.reserve(coords.size());
  for (int c : coords) {
    if (c < 0 || c > 3) {
      throw Error(ErrorCode::kInvalidVertex,
                  "coordinate " + std::to_string(c) + " is not a residue mod 4");
    }
    coords_.push_back(static_cast<std::uint8_t>(c));
  }
}

Vertex Vertex::from_index(VertexIndex index, int n) {
  if (n < 1 || n > kMaxIndexableDimension || index >= pow4(n)) {
    throw Error(ErrorCode::kInvalidVertex,
                "index " + std::to_string(index) + " out of range for dimension " +
                    std::to_string(n));
  }
  Vertex v;
  v.coords_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.coords_[static_cast<std::size_t>(i)] =
      static_cast<std::uint8_t>(digit(index, i));
  return v;
}

Vertex Vertex::parse(std::string_view text) {
  std::vector<int> coords;
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty()) throw Error(ErrorCode::kInvalidVertex, "empty vertex text");

  if (trimmed.front() == '(') {
    if (trimmed.back() != ')') {
      throw Error(ErrorCode::kInvalidVertex, "unterminated vertex: " + std::string(text));
    }
    trimmed = trimmed.substr(1, trimmed.size() - 2);
    std::size_t pos = 0;
    while (pos <= trimmed.size()) {
      std::size_t comma = trimmed.find(',', pos);
      if (comma == std::string_view::npos) comma = trimmed.size();
      auto field = trimmed.substr(pos, comma - pos);
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
        field.remove_prefix(1);
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
        field.remove_suffix(1);
      if (field.size() != 1 || !std::isdigit(static_cast<unsigned char>(field.front()))) {
        throw Error(ErrorCode::kInvalidVertex, "bad coordinate in: " + std::string(text));
      }
      coords.push_back(field.front() - '0');
      pos = comma + 1;
    }
  } else {
    for (char c : trimmed) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kInvalidVertex, "bad digit in: " + std::string(text));
      }
      coords.push_back(c - '0');
    }
  }
  return Vertex(std::move(coords));
}

VertexIndex Vertex::index() const {
  VertexIndex index = 0;
  for (int i = dimension() - 1; i >= 0; --i) index = index * 4 + coords_[static_cast<std::size_t>(i)];
  return index;
}

std::string Vertex::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + coords_[i]);
  }
  out += ')';
  return out;
}

std::string Vertex::to_compact() const {
  std::string out;
  for (auto c : coords_) out += static_cast<char>('0' + c);
  return out;
}

Vertex partner(const Vertex& v) {
  std::vector<int> coords(v.coords().begin(), v.coords().end());
  coords[0] = (coords[0] + 2) % 4;
  return Vertex(std::move(coords));
}

VertexIndex partner_index(VertexIndex v) { return with_digit(v, 0, digit(v, 0) + 2); }

std::vector<Vertex> neighbors_direct(const Vertex& v, int n) {
  if (v.dimension() != n) {
    throw Error(ErrorCode::kInvalidVertex, "vertex " + v.to_string() + " does not have " +
                                               std::to_string(n) + " coordinates");
  }
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  std::vector<int> base(v.coords().begin(), v.coords().end());
  const int a0 = base[0];
  const int shift = (a0 % 2 == 0) ? 1 : -1;
  for (int i = 0; i < n; ++i) {
    for (int step : {1, -1}) {
      auto c = base;
      c[0] = (a0 + step + 4) % 4;
      if (i > 0) c[static_cast<std::size_t>(i)] = (c[static_cast<std::size_t>(i)] + shift + 4) % 4;
      out.emplace_back(std::move(c));
    }
  }
  return out;
}

CubeGraph CubeGraph::from_adjacency(int n, std::vector<VertexIndex> adjacency,
                                    std::vector<std::uint8_t> dims) {
  CubeGraph g;
  g.n_ = n;
  g.vertex_count_ = pow4(n);
  const std::size_t deg = static_cast<std::size_t>(2 * n);
  if (adjacency.size() != g.vertex_count_ * deg || dims.size() != adjacency.size()) {
    throw Error(ErrorCode::kInternal, "adjacency table has the wrong size");
  }

  // Sort each neighbor list, carrying dimension tags along.
  std::vector<std::pair<VertexIndex, std::uint8_t>> row(deg);
  for (std::size_t v = 0; v < g.vertex_count_; ++v) {
    for (std::size_t j = 0; j < deg; ++j) row[j] = {adjacency[v * deg + j], dims[v * deg + j]};
    std::sort(row.begin(), row.end());
    for (std::size_t j = 0; j < deg; ++j) {
      adjacency[v * deg + j] = row[j].first;
      dims[v * deg + j] = row[j].second;
    }
  }
  g.adjacency_ = std::move(adjacency);
  g.dims_ = std::move(dims);

  for (VertexIndex v = 0; v < g.vertex_count_; ++v) {
    auto nbrs = g.neighbors(v);
    for (std::size_t j = 0; j < deg; ++j) {
      const VertexIndex u = nbrs[j];
      if (u >= g.vertex_count_ || u == v) throw Error(ErrorCode::kInternal, "bad neighbor entry");
      if (j > 0 && nbrs[j - 1] == u) throw Error(ErrorCode::kInternal, "duplicate neighbor");
      if (g.edge_dim(u, v) != g.neighbor_dims(v)[j]) {
        throw Error(ErrorCode::kInternal, "adjacency is not symmetric");
      }
      // The neighbors of v must come in n partner pairs.
      const VertexIndex p = partner_index(u);
      if (!std::binary_search(nbrs.begin(), nbrs.end(), p)) {
        throw Error(ErrorCode::kInternal, "neighbor partner missing");
      }
    }
  }
  return g;
}

bool CubeGraph::adjacent(VertexIndex u, VertexIndex v) const { return edge_dim(u, v) >= 0; }

int CubeGraph::edge_dim(VertexIndex u, VertexIndex v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return -1;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return -1;
  return neighbor_dims(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

VertexIndex CubeGraph::index_of(const Vertex& v) const {
  if (v.dimension() != n_) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + v.to_string() + " is not in BH_" + std::to_string(n_));
  }
  return v.index();
}

std::vector<Edge> CubeGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexIndex v = 0; v < vertex_count_; ++v) {
    auto nbrs = neighbors(v);
    auto tags = neighbor_dims(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (v < nbrs[j]) out.push_back({v, nbrs[j], tags[j]});
    }
  }
  return out;
}

CubeGraph build_direct(int n, const BuildLimits& limits) {
  check_dimension(n, limits);
  const std::size_t count = pow4(n);
  const std::size_t deg = static_cast<std::size_t>(2 * n);
  std::vector<VertexIndex> adjacency(count * deg);
  std::vector<std::uint8_t> dims(count * deg);
  for (VertexIndex v = 0; v < count; ++v) {
    const int a0 = digit(v, 0);
    const int shift = (a0 % 2 == 0) ? 1 : 3;  // +1 or -1 mod 4
    std::size_t j = static_cast<std::size_t>(v) * deg;
    for (int i = 0; i < n; ++i) {
      VertexIndex base = v;
      if (i > 0) base = with_digit(base, i, digit(v, i) + shift);
      for (int step : {1, 3}) {
        adjacency[j] = with_digit(base, 0, a0 + step);
        dims[j] = static_cast<std::uint8_t>(i);
        ++j;
      }
    }
  }
  return CubeGraph::from_adjacency(n, std::move(adjacency), std::move(dims));
}

CubeGraph build_recursive(int n, const BuildLimits& limits) {
  check_dimension(n, limits);
  // BH_1: the 4-cycle 0-1-2-3-0.
  std::vector<VertexIndex> adjacency = {1, 3, 0, 2, 1, 3, 0, 2};
  std::vector<std::uint8_t> dims(8, 0);
  for (int k = 1; k < n; ++k) {
    const std::size_t old_count = pow4(k);
    const std::size_t old_deg = static_cast<std::size_t>(2 * k);
    const std::size_t new_deg = old_deg + 2;
    std::vector<VertexIndex> next(4 * old_count * new_deg);
    std::vector<std::uint8_t> next_dims(next.size());
    for (int copy = 0; copy < 4; ++copy) {
      const VertexIndex shift = static_cast<VertexIndex>(copy) * place(k);
      for (VertexIndex v = 0; v < old_count; ++v) {
        const VertexIndex nv = v + shift;
        std::size_t j = static_cast<std::size_t>(nv) * new_deg;
        for (std::size_t e = 0; e < old_deg; ++e) {
          next[j] = adjacency[v * old_deg + e] + shift;
          next_dims[j] = dims[v * old_deg + e];
          ++j;
        }
        const int a0 = digit(v, 0);
        const int target = (a0 % 2 == 0) ? (copy + 1) % 4 : (copy + 3) % 4;
        const VertexIndex target_shift = static_cast<VertexIndex>(target) * place(k);
        for (int step : {1, 3}) {
          next[j] = with_digit(v, 0, a0 + step) + target_shift;
          next_dims[j] = static_cast<std::uint8_t>(k);
          ++j;
        }
      }
    }
    adjacency = std::move(next);
    dims = std::move(next_dims);
  }
  return CubeGraph::from_adjacency(n, std::move(adjacency), std::move(dims));
}

SubcubeSplit split_subcubes(const CubeGraph& g) {
  const int n = g.dimension();
  if (n < 2) throw Error(ErrorCode::kParameter, "BH_1 has no subcube split");
  SubcubeSplit split;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    split.parts[static_cast<std::size_t>(digit(v, n - 1))].push_back(v);
  }
  for (int k = 0; k < 4; ++k) {
    const int next = (k + 1) % 4;
    for (VertexIndex v : split.parts[static_cast<std::size_t>(k)]) {
      auto nbrs = g.neighbors(v);
      auto tags = g.neighbor_dims(v);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (digit(nbrs[j], n - 1) == next) {
          split.cross_edges[static_cast<std::size_t>(k)].push_back({v, nbrs[j], tags[j]});
        }
      }
    }
  }
  return split;
}

std::size_t count_edges_between(const CubeGraph& g, std::span<const VertexIndex> a,
                                std::span<const VertexIndex> b) {
  std::vector<bool> in_b(g.vertex_count(), false);
  for (VertexIndex v : b) in_b[v] = true;
  std::size_t count = 0;
  for (VertexIndex v : a) {
    for (VertexIndex u : g.neighbors(v)) count += in_b[u] ? 1 : 0;
  }
  return count;
}

CubeGraph subcube_graph(const CubeGraph& g, const SubcubeSplit& split, int k) {
  const int n = g.dimension();
  const std::size_t sub_deg = static_cast<std::size_t>(2 * (n - 1));
  const auto& part = split.parts.at(static_cast<std::size_t>(k));
  const VertexIndex mask = static_cast<VertexIndex>(pow4(n - 1) - 1);
  std::vector<VertexIndex> adjacency(part.size() * sub_deg);
  std::vector<std::uint8_t> dims(adjacency.size());
  for (VertexIndex v : part) {
    const std::size_t row = static_cast<std::size_t>(v & mask) * sub_deg;
    std::size_t j = 0;
    auto nbrs = g.neighbors(v);
    auto tags = g.neighbor_dims(v);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      if (digit(nbrs[e], n - 1) != k) continue;
      if (j == sub_deg) throw Error(ErrorCode::kInternal, "subcube degree too large");
      adjacency[row + j] = nbrs[e] & mask;
      dims[row + j] = tags[e];
      ++j;
    }
    if (j != sub_deg) throw Error(ErrorCode::kInternal, "subcube degree too small");
  }
  return CubeGraph::from_adjacency(n - 1, std::move(adjacency), std::move(dims));
}

Bipartition bipartition(const CubeGraph& g) {
  Bipartition parts;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    (digit(v, 0) % 2 == 0 ? parts.white : parts.black).push_back(v);
  }
  return parts;
}

std::size_t count_monochromatic_edges(const CubeGraph& g) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += (digit(e.u, 0) % 2 == digit(e.v, 0) % 2) ? 1 : 0;
  return count;
}

}  // namespace bhcut

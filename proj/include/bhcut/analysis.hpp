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

#ifndef BHCUT_ANALYSIS_HPP_
#define BHCUT_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhcut/topology.hpp"

namespace bhcut {

// A set of vertices to delete from a host graph. Members are kept sorted and
// unique, and must be valid indices of the host.
class FaultSet {
 public:
  FaultSet() = default;
  // Throws Error(kInvalidVertex) for an index outside the host.
  FaultSet(const CubeGraph& host, std::vector<VertexIndex> members);

  const std::vector<VertexIndex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexIndex v) const;

  friend bool operator==(const FaultSet&, const FaultSet&) = default;

 private:
  std::vector<VertexIndex> members_;
};

struct Component {
  std::vector<VertexIndex> vertices;  // sorted
  int min_degree = 0;                 // inside the induced component

  std::size_t size() const { return vertices.size(); }
};

struct ComponentReport {
  // Ordered by smallest contained vertex index.
  std::vector<Component> components;
  bool connected = true;
  std::size_t fault_size = 0;
};

enum class CutKind { kPlain, kGExtra, kRestricted };

const char* cut_kind_name(CutKind kind);
// Accepts "plain", "extra" and "restricted". Throws Error(kParameter).
CutKind parse_cut_kind(std::string_view name);

struct CutSpec {
  CutKind kind = CutKind::kPlain;
  int param = 0;  // g for kGExtra, h for kRestricted, ignored for kPlain

  friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

struct CutVerdict {
  bool is_cut = false;
  CutSpec spec;
  // First component (in report order) violating the bound, if any.
  std::optional<std::size_t> failing_component;
  // Its offending measurement: min degree for restricted, size for extra.
  std::optional<std::size_t> failing_value;
};

// Breadth-first decomposition of G - F. Throws Error(kEmptyGraph) if F
// covers every vertex.
ComponentReport components(const CubeGraph& g, const FaultSet& f);

// Throws Error(kParameter) unless 0 <= h < 2n.
CutVerdict is_restricted_h_cut(const CubeGraph& g, const FaultSet& f, int h);
// Throws Error(kParameter) for a negative g.
CutVerdict is_g_extra_cut(const CubeGraph& g, const FaultSet& f, int gparam);
CutVerdict is_plain_cut(const CubeGraph& g, const FaultSet& f);
CutVerdict evaluate_cut(const CubeGraph& g, const FaultSet& f, const CutSpec& spec);

// Verdicts derived from an existing report, so one decomposition can be
// judged against several definitions.
CutVerdict restricted_verdict(const ComponentReport& report, int h);
CutVerdict g_extra_verdict(const ComponentReport& report, int gparam);

// True iff `s` is closed under the partner involution.
bool partner_closure_check(const CubeGraph& g, std::span<const VertexIndex> s);

// N(S) = union of N(v) over v in S, minus S. Sorted.
std::vector<VertexIndex> neighborhood(const CubeGraph& g, std::span<const VertexIndex> s);

// Reusable evaluator for hot search loops: judges a deletion set without
// allocating. Not thread-safe; use one per worker.
class CutTester {
 public:
  explicit CutTester(const CubeGraph& g);

  // `removed` must hold distinct valid indices.
  bool test(std::span<const VertexIndex> removed, const CutSpec& spec);

 private:
  const CubeGraph* g_;
  std::vector<std::uint32_t> removed_stamp_;
  std::vector<std::uint32_t> seen_stamp_;
  std::vector<VertexIndex> queue_;
  std::uint32_t stamp_ = 0;
};

}  // namespace bhcut

#endif  // BHCUT_ANALYSIS_HPP_

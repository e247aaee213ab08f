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

#include "bhcut/analysis.hpp"

#include <algorithm>
#include <limits>

#include "bhcut/error.hpp"

namespace bhcut {

FaultSet::FaultSet(const CubeGraph& host, std::vector<VertexIndex> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= host.vertex_count()) {
    throw Error(ErrorCode::kInvalidVertex, "fault index " + std::to_string(members_.back()) +
                                               " outside host graph");
  }
}

bool FaultSet::contains(VertexIndex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

const char* cut_kind_name(CutKind kind) {
  switch (kind) {
    case CutKind::kPlain: return "plain";
    case CutKind::kGExtra: return "extra";
    case CutKind::kRestricted: return "restricted";
  }
  return "unknown";
}

CutKind parse_cut_kind(std::string_view name) {
  if (name == "plain") return CutKind::kPlain;
  if (name == "extra") return CutKind::kGExtra;
  if (name == "restricted") return CutKind::kRestricted;
  throw Error(ErrorCode::kParameter, "unknown cut kind: " + std::string(name));
}

ComponentReport components(const CubeGraph& g, const FaultSet& f) {
  const std::size_t count = g.vertex_count();
  if (f.size() >= count) throw Error(ErrorCode::kEmptyGraph, "fault set covers every vertex");

  std::vector<bool> removed(count, false);
  for (VertexIndex v : f.members()) removed[v] = true;
  std::vector<bool> seen(count, false);

  ComponentReport report;
  report.fault_size = f.size();
  std::vector<VertexIndex> queue;
  for (VertexIndex start = 0; start < count; ++start) {
    if (removed[start] || seen[start]) continue;
    Component comp;
    comp.min_degree = std::numeric_limits<int>::max();
    queue.assign(1, start);
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexIndex v = queue[head];
      int degree = 0;
      for (VertexIndex u : g.neighbors(v)) {
        if (removed[u]) continue;
        ++degree;
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
      comp.min_degree = std::min(comp.min_degree, degree);
    }
    comp.vertices = queue;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    report.components.push_back(std::move(comp));
  }
  report.connected = report.components.size() == 1;
  return report;
}

CutVerdict restricted_verdict(const ComponentReport& report, int h) {
  CutVerdict verdict;
  verdict.spec = {CutKind::kRestricted, h};
  if (report.connected) return verdict;
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    if (report.components[i].min_degree < h) {
      verdict.failing_component = i;
      verdict.failing_value = static_cast<std::size_t>(report.components[i].min_degree);
      return verdict;
    }
  }
  verdict.is_cut = true;
  return verdict;
}

CutVerdict g_extra_verdict(const ComponentReport& report, int gparam) {
  CutVerdict verdict;
  verdict.spec = {CutKind::kGExtra, gparam};
  if (report.connected) return verdict;
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    if (report.components[i].size() < static_cast<std::size_t>(gparam) + 1) {
      verdict.failing_component = i;
      verdict.failing_value = report.components[i].size();
      return verdict;
    }
  }
  verdict.is_cut = true;
  return verdict;
}

CutVerdict is_restricted_h_cut(const CubeGraph& g, const FaultSet& f, int h) {
  if (h < 0 || h >= g.degree()) {
    throw Error(ErrorCode::kParameter, "restricted h must lie in 0.." +
                                           std::to_string(g.degree() - 1));
  }
  return restricted_verdict(components(g, f), h);
}

CutVerdict is_g_extra_cut(const CubeGraph& g, const FaultSet& f, int gparam) {
  if (gparam < 0) throw Error(ErrorCode::kParameter, "extra g must be nonnegative");
  return g_extra_verdict(components(g, f), gparam);
}

CutVerdict is_plain_cut(const CubeGraph& g, const FaultSet& f) {
  CutVerdict verdict;
  verdict.spec = {CutKind::kPlain, 0};
  verdict.is_cut = !components(g, f).connected;
  return verdict;
}

CutVerdict evaluate_cut(const CubeGraph& g, const FaultSet& f, const CutSpec& spec) {
  switch (spec.kind) {
    case CutKind::kPlain: return is_plain_cut(g, f);
    case CutKind::kGExtra: return is_g_extra_cut(g, f, spec.param);
    case CutKind::kRestricted: return is_restricted_h_cut(g, f, spec.param);
  }
  throw Error(ErrorCode::kInternal, "unhandled cut kind");
}

bool partner_closure_check(const CubeGraph& g, std::span<const VertexIndex> s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexIndex v : s) {
    if (v >= g.vertex_count()) throw Error(ErrorCode::kInvalidVertex, "vertex outside graph");
    in[v] = true;
  }
  return std::all_of(s.begin(), s.end(), [&](VertexIndex v) { return in[partner_index(v)]; });
}

std::vector<VertexIndex> neighborhood(const CubeGraph& g, std::span<const VertexIndex> s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (VertexIndex v : s) in[v] = true;
  std::vector<bool> hit(g.vertex_count(), false);
  std::vector<VertexIndex> out;
  for (VertexIndex v : s) {
    for (VertexIndex u : g.neighbors(v)) {
      if (!in[u] && !hit[u]) {
        hit[u] = true;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CutTester::CutTester(const CubeGraph& g)
    : g_(&g),
      removed_stamp_(g.vertex_count(), 0),
      seen_stamp_(g.vertex_count(), 0) {
  queue_.reserve(g.vertex_count());
}

bool CutTester::test(std::span<const VertexIndex> removed, const CutSpec& spec) {
  if (++stamp_ == 0) {
    std::fill(removed_stamp_.begin(), removed_stamp_.end(), 0);
    std::fill(seen_stamp_.begin(), seen_stamp_.end(), 0);
    stamp_ = 1;
  }
  for (VertexIndex v : removed) removed_stamp_[v] = stamp_;

  const auto count = static_cast<VertexIndex>(g_->vertex_count());
  std::size_t components = 0;
  for (VertexIndex start = 0; start < count; ++start) {
    if (removed_stamp_[start] == stamp_ || seen_stamp_[start] == stamp_) continue;
    ++components;
    queue_.assign(1, start);
    seen_stamp_[start] = stamp_;
    int min_degree = std::numeric_limits<int>::max();
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int degree = 0;
      for (VertexIndex u : g_->neighbors(queue_[head])) {
        if (removed_stamp_[u] == stamp_) continue;
        ++degree;
        if (seen_stamp_[u] != stamp_) {
          seen_stamp_[u] = stamp_;
          queue_.push_back(u);
        }
      }
      min_degree = std::min(min_degree, degree);
    }
    if (spec.kind == CutKind::kRestricted && min_degree < spec.param) return false;
    if (spec.kind == CutKind::kGExtra && queue_.size() < static_cast<std::size_t>(spec.param) + 1) {
      return false;
    }
    if (spec.kind == CutKind::kPlain && components >= 2) return true;
  }
  return components >= 2;
}

}  // namespace bhcut

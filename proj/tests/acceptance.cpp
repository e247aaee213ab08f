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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero when
// any criterion fails or overruns its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bhcut/analysis.hpp"
#include "bhcut/constructions.hpp"
#include "bhcut/error.hpp"
#include "bhcut/solver.hpp"
#include "bhcut/topology.hpp"

namespace {

using namespace bhcut;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Criterion = std::function<void(Check&)>;

void generator_equivalence(Check& c) {
  for (int n = 1; n <= 4; ++n) {
    const CubeGraph d = build_direct(n);
    const CubeGraph r = build_recursive(n);
    const auto edges = d.edges();
    c.expect(edges == r.edges(), "edge sets n=" + std::to_string(n));
    c.expect(d.vertex_count() == pow4(n), "vertex count n=" + std::to_string(n));
    c.expect(edges.size() == static_cast<std::size_t>(n) * pow4(n),
             "edge count n=" + std::to_string(n));
    c.detail << "n=" << n << ":" << d.vertex_count() << "v/" << edges.size() << "e ";
  }
}

void structural_properties(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    const CubeGraph g = build_direct(n);
    const std::string tag = " n=" + std::to_string(n);
    c.expect(count_monochromatic_edges(g) == 0, "bipartite" + tag);
    std::size_t partner_ok = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      const auto a = g.neighbors(v);
      const auto b = g.neighbors(partner_index(v));
      if (std::equal(a.begin(), a.end(), b.begin(), b.end())) ++partner_ok;
    }
    c.expect(partner_ok == g.vertex_count(), "partner neighborhoods" + tag);
    const SubcubeSplit split = split_subcubes(g);
    for (std::size_t k = 0; k < 4; ++k) {
      c.expect(split.cross_edges[k].size() == pow4(n - 1), "adjacent subcubes" + tag);
    }
    for (std::size_t k = 0; k < 2; ++k) {
      c.expect(count_edges_between(g, split.parts[k], split.parts[k + 2]) == 0,
               "opposite subcubes" + tag);
    }
    c.detail << "n=" << n << " ok ";
  }
}

void small_constants(Check& c) {
  const CubeGraph g = build_direct(2);
  std::vector<CutSpec> specs = {{CutKind::kRestricted, 1}, {CutKind::kRestricted, 2}};
  for (int k = 1; k <= 5; ++k) specs.push_back({CutKind::kGExtra, k});
  for (const CutSpec& spec : specs) {
    const SolverResult r = brute_force_min_cut(g, spec, 4);
    const std::string name = std::string(cut_kind_name(spec.kind)) + std::to_string(spec.param);
    c.expect(r.value == 4, name + " value");
    c.detail << name << "=" << (r.value ? std::to_string(*r.value) : "none") << " ";
  }
}

void bh3_exact(Check& c) {
  const CubeGraph g = build_direct(3);
  const UpperBoundCertificate cert = verify_upper_bound(g);
  c.expect(cert.cut_size == 12 && cert.restricted4_cut && cert.verdict == "valid",
           "12-vertex cut is a restricted-4 cut");
  SearchOptions options;
  options.workers = 1;
  const SolverResult lower = quotient_min_restricted_cut(g, 3, 10, options);
  c.expect(!lower.value, "no restricted-3 cut of size <= 10");
  c.expect(lower.coverage.subsets_examined == 242'824, "class subsets examined");
  const SolverResult exact = quotient_min_restricted_cut(g, 3, 12, options);
  c.expect(exact.value == 12, "restricted-3 value");
  c.detail << "upper=" << cert.cut_size << " lower_search=" << lower.coverage.subsets_examined
           << " subsets/none value=" << (exact.value ? std::to_string(*exact.value) : "none")
           << " ";
}

void tee_counterexample(Check& c) {
  const CubeGraph g = build_direct(3);
  std::vector<VertexIndex> tee;
  for (const Vertex& v : build_T(3)) tee.push_back(v.index());
  std::sort(tee.begin(), tee.end());
  const auto degrees = induced_degrees(g, tee);
  const bool four_regular =
      std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 4; });
  c.expect(tee.size() == 12, "12 vertices");
  c.expect(four_regular, "4-regular");
  c.expect((1u << 4) > tee.size(), "2^4 exceeds |T|");
  c.detail << "|T|=" << tee.size() << " induced degree 4, 2^4=16 ";
}

void bh4_anomaly(Check& c) {
  const UpperBoundCertificate cert = verify_upper_bound(build_direct(4));
  const std::vector<Vertex> expected = {Vertex({0, 3, 0, 1}), Vertex({2, 3, 0, 1}),
                                        Vertex({1, 0, 1, 3}), Vertex({3, 0, 1, 3})};
  auto got = cert.anomaly_vertices;
  auto want = expected;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  c.expect(cert.components.size() == 2, "two components");
  c.expect(got == want, "degree-2 vertices");
  c.expect(!cert.restricted3_cut, "not a restricted-3 cut");
  c.detail << "cut=" << cert.cut_size << " degree2=";
  for (const Vertex& v : cert.anomaly_vertices) c.detail << v.to_string();
  c.detail << " ";
}

void bh5_construction(Check& c) {
  const CubeGraph g = build_direct(5);
  const UpperBoundCertificate cert = verify_upper_bound(g);
  c.expect(g.vertex_count() == 1024, "1024 vertices");
  c.expect(cert.cut_size == 36, "36-vertex cut");
  c.expect(cert.restricted4_cut, "restricted-4 cut");
  std::optional<int> outer;
  for (const ComponentSummary& s : cert.components) {
    if (!s.contains_tee) outer = s.min_degree;
  }
  c.expect(outer == 4, "non-T component min degree 4");
  c.detail << "cut=" << cert.cut_size << " components=" << cert.components.size()
           << " outer_min_degree=" << (outer ? std::to_string(*outer) : "none") << " ";
}

void lift_soundness(Check& c) {
  for (int n = 1; n <= 3; ++n) {
    const CubeGraph g = build_direct(n);
    const QuotientGraph q = build_quotient(g);
    LiftCheckOptions options;
    options.sample_budget = 100'000;
    const LiftReport report = verify_lift_equivalence(g, q, options);
    c.expect(report.sound(), "mismatches on n=" + std::to_string(n));
    if (n <= 2) c.expect(report.exhaustive, "exhaustive on n=" + std::to_string(n));
    if (n == 3) c.expect(report.subsets_checked >= 100'000, "samples on n=3");
    c.detail << "n=" << n << (report.exhaustive ? " exhaustive " : " sampled ")
             << report.subsets_checked << " mismatches=" << report.mismatches.size() << " ";
  }
}

void parity(Check& c) {
  for (int n = 2; n <= 3; ++n) {
    const CubeGraph g = build_direct(n);
    const int bound = n == 2 ? 14 : 12;
    std::map<int, std::optional<int>> values;
    for (int h = 1; h < 2 * n; ++h) {
      values[h] = min_cut(g, {CutKind::kRestricted, h}, bound).value;
    }
    for (int h = 1; h + 1 < 2 * n; h += 2) {
      if (values[h] && values[h + 1]) {
        c.expect(*values[h] == *values[h + 1], "parity n=" + std::to_string(n));
      }
    }
    std::optional<int> last;
    for (const auto& [h, v] : values) {
      if (!v) continue;
      if (last) c.expect(*v >= *last, "monotone n=" + std::to_string(n));
      last = v;
    }
    c.detail << "n=" << n << ":";
    for (const auto& [h, v] : values) c.detail << " h" << h << "=" << (v ? std::to_string(*v) : "none");
    c.detail << " ";
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double limit_s;
    Criterion run;
  };
  const std::vector<Entry> entries = {
      {1, "generator equivalence", 5.0, generator_equivalence},
      {2, "structural properties", 30.0, structural_properties},
      {3, "BH_2 constants", 10.0, small_constants},
      {4, "BH_3 restricted-3/4 connectivity 12", 120.0, bh3_exact},
      {5, "4-regular 12-vertex subgraph", 1.0, tee_counterexample},
      {6, "BH_4 anomaly", 5.0, bh4_anomaly},
      {7, "BH_5 construction", 30.0, bh5_construction},
      {8, "reduction soundness", 60.0, lift_soundness},
      {9, "parity and monotonicity", 120.0, parity},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(check);
    } catch (const std::exception& ex) {
      check.pass = false;
      check.detail << "[exception: " << ex.what() << "] ";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < e.limit_s;
    const bool pass = check.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s %d %s (%.3fs, limit %.0fs%s): %s\n", pass ? "PASS" : "FAIL", e.id, e.title,
                seconds, e.limit_s, in_time ? "" : ", exceeded", check.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(entries.size()) - failures,
              entries.size());
  return failures == 0 ? 0 : 1;
}

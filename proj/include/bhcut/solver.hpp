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

#ifndef BHCUT_SOLVER_HPP_
#define BHCUT_SOLVER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhcut/analysis.hpp"
#include "bhcut/topology.hpp"

namespace bhcut {

// C(m, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);
// Sum of C(m, k) for k in [lo, hi], saturating.
std::uint64_t binomial_sum(std::uint64_t m, std::uint64_t lo, std::uint64_t hi);

using ClassIndex = std::uint32_t;

// BH_n with every partner pair {v, v'} collapsed to one class. Classes are
// numbered by their smaller vertex index.
class QuotientGraph {
 public:
  int dimension() const { return n_; }
  std::size_t class_count() const { return classes_.size(); }
  // Class degree; equals n.
  int degree() const { return n_; }

  const std::array<VertexIndex, 2>& members(ClassIndex c) const { return classes_[c]; }
  ClassIndex class_of(VertexIndex v) const { return class_of_[v]; }
  std::span<const ClassIndex> neighbors(ClassIndex c) const {
    return {adjacency_.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }

  // Sorted vertex indices of the union of the given classes.
  std::vector<VertexIndex> lift(std::span<const ClassIndex> classes) const;

 private:
  friend QuotientGraph build_quotient(const CubeGraph& g);

  int n_ = 0;
  std::vector<std::array<VertexIndex, 2>> classes_;
  std::vector<ClassIndex> class_of_;
  std::vector<ClassIndex> adjacency_;
};

// Throws Error(kInternal) if the collapse is not a simple n-regular graph on
// 4^n/2 classes.
QuotientGraph build_quotient(const CubeGraph& g);

// Judges the lift of a class subset without lifting it. Only restricted
// (h >= 1) and extra (g >= 1) specs are meaningful here; throws
// Error(kParameter) otherwise.
class QuotientTester {
 public:
  explicit QuotientTester(const QuotientGraph& q);
  bool test(std::span<const ClassIndex> removed, const CutSpec& spec);

 private:
  const QuotientGraph* q_;
  std::vector<std::uint32_t> removed_stamp_;
  std::vector<std::uint32_t> seen_stamp_;
  std::vector<ClassIndex> queue_;
  std::uint32_t stamp_ = 0;
};

enum class SearchRoute { kAuto, kBruteForce, kQuotient };

const char* search_route_name(SearchRoute route);

struct SearchOptions {
  // Maximum number of subsets a search may examine.
  std::uint64_t work_budget = 1'000'000'000;
  unsigned workers = 1;
  SearchRoute route = SearchRoute::kAuto;
  // Random lifted class subsets cross-checked against the direct predicates
  // before a quotient search on graphs too large for the exhaustive check.
  // Zero disables the gate.
  std::uint64_t lift_check_samples = 2000;
};

struct Coverage {
  // Subset sizes enumerated exhaustively, in the searched universe (vertices
  // for brute force, partner classes for the quotient route).
  std::vector<int> sizes_searched;
  std::uint64_t subsets_examined = 0;
  bool quotient_used = false;
  std::size_t universe = 0;
};

struct SolverResult {
  CutSpec spec;
  int n = 0;
  int bound = 0;
  std::optional<int> value;  // none within the bound when empty
  std::optional<std::vector<VertexIndex>> witness;
  Coverage coverage;
  double elapsed_ms = 0.0;
};

// Enumerates every fault set of size 1..bound in increasing size and stops
// at the first size holding a valid cut. Throws BudgetExceeded when the
// enumeration would exceed options.work_budget.
SolverResult brute_force_min_cut(const CubeGraph& g, const CutSpec& spec, int bound,
                                 const SearchOptions& options = {});

// Searches partner-closed fault sets only, via class subsets of size up to
// bound/2. Exact whenever the true value is at most `bound`.
// Throws Error(kParameter) for h = 0, h >= 2n or bound >= 4^n.
SolverResult quotient_min_restricted_cut(const CubeGraph& g, int h, int bound,
                                         const SearchOptions& options = {});

// Minimum g-extra cut. The brute-force route is used on BH_1/BH_2 (or when
// forced); otherwise the quotient route, which needs g >= 1.
SolverResult g_extra_min_cut(const CubeGraph& g, int gparam, int bound,
                             const SearchOptions& options = {});

// Dispatch on spec kind and options.route.
SolverResult min_cut(const CubeGraph& g, const CutSpec& spec, int bound,
                     const SearchOptions& options = {});

struct LiftMismatch {
  std::vector<ClassIndex> classes;
  CutSpec spec;
  bool quotient_verdict = false;
  bool direct_verdict = false;
};

struct LiftReport {
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::uint64_t verdicts_compared = 0;
  std::uint64_t cuts_seen = 0;  // direct verdicts that were cuts
  std::vector<LiftMismatch> mismatches;

  bool sound() const { return mismatches.empty(); }
};

struct LiftCheckOptions {
  // Quotients with at most this many classes are checked over every proper
  // class subset; larger ones are sampled.
  std::size_t exhaustive_class_limit = 16;
  std::uint64_t sample_budget = 100'000;
  std::uint64_t seed = 0x6268637574ULL;
};

// Compares QuotientTester against the direct predicates on lifted fault
// sets, for restricted h in {1,2,3,4} and extra g in {1,...,5} (those valid
// for the dimension).
LiftReport verify_lift_equivalence(const CubeGraph& g, const QuotientGraph& q,
                                   const LiftCheckOptions& options = {});

// Throws Error(kSoundness) when the report holds a mismatch.
void require_sound(const LiftReport& report);

}  // namespace bhcut

#endif  // BHCUT_SOLVER_HPP_

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

#include "bhcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "bhcut/error.hpp"

namespace bhcut {

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (m - k + i) / i;
    if (value > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t binomial_sum(std::uint64_t m, std::uint64_t lo, std::uint64_t hi) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    const std::uint64_t term = binomial(m, k);
    if (term > kMax - total) return kMax;
    total += term;
  }
  return total;
}

std::vector<VertexIndex> QuotientGraph::lift(std::span<const ClassIndex> classes) const {
  std::vector<VertexIndex> out;
  out.reserve(classes.size() * 2);
  for (ClassIndex c : classes) {
    out.push_back(classes_[c][0]);
    out.push_back(classes_[c][1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientGraph build_quotient(const CubeGraph& g) {
  QuotientGraph q;
  q.n_ = g.dimension();
  const std::size_t count = g.vertex_count();
  constexpr auto kUnset = std::numeric_limits<ClassIndex>::max();
  q.class_of_.assign(count, kUnset);
  for (VertexIndex v = 0; v < count; ++v) {
    if (q.class_of_[v] != kUnset) continue;
    const VertexIndex p = partner_index(v);
    const auto c = static_cast<ClassIndex>(q.classes_.size());
    q.classes_.push_back({v, p});
    q.class_of_[v] = c;
    q.class_of_[p] = c;
  }
  if (q.classes_.size() * 2 != count) throw Error(ErrorCode::kInternal, "partner classes malformed");

  const auto n = static_cast<std::size_t>(q.n_);
  q.adjacency_.reserve(q.classes_.size() * n);
  std::vector<ClassIndex> row;
  for (const auto& members : q.classes_) {
    row.clear();
    for (VertexIndex u : g.neighbors(members[0])) row.push_back(q.class_of_[u]);
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    std::vector<ClassIndex> other;
    for (VertexIndex u : g.neighbors(members[1])) other.push_back(q.class_of_[u]);
    std::sort(other.begin(), other.end());
    other.erase(std::unique(other.begin(), other.end()), other.end());
    if (row.size() != n || row != other) {
      throw Error(ErrorCode::kInternal, "quotient is not n-regular");
    }
    if (std::binary_search(row.begin(), row.end(), q.class_of_[members[0]])) {
      throw Error(ErrorCode::kInternal, "quotient has a loop");
    }
    q.adjacency_.insert(q.adjacency_.end(), row.begin(), row.end());
  }
  return q;
}

QuotientTester::QuotientTester(const QuotientGraph& q)
    : q_(&q), removed_stamp_(q.class_count(), 0), seen_stamp_(q.class_count(), 0) {
  queue_.reserve(q.class_count());
}

bool QuotientTester::test(std::span<const ClassIndex> removed, const CutSpec& spec) {
  // An isolated class lifts to two isolated vertices, so every component
  // needs at least two classes. Lifted degrees are twice class degrees.
  int degree_threshold = 0;
  std::size_t class_threshold = 2;
  if (spec.kind == CutKind::kRestricted && spec.param >= 1) {
    degree_threshold = (spec.param + 1) / 2;
  } else if (spec.kind == CutKind::kGExtra && spec.param >= 1) {
    class_threshold = std::max<std::size_t>(2, (static_cast<std::size_t>(spec.param) + 2) / 2);
  } else {
    throw Error(ErrorCode::kParameter, "quotient test needs restricted h >= 1 or extra g >= 1");
  }

  if (++stamp_ == 0) {
    std::fill(removed_stamp_.begin(), removed_stamp_.end(), 0);
    std::fill(seen_stamp_.begin(), seen_stamp_.end(), 0);
    stamp_ = 1;
  }
  for (ClassIndex c : removed) removed_stamp_[c] = stamp_;

  const auto count = static_cast<ClassIndex>(q_->class_count());
  std::size_t components = 0;
  for (ClassIndex start = 0; start < count; ++start) {
    if (removed_stamp_[start] == stamp_ || seen_stamp_[start] == stamp_) continue;
    ++components;
    queue_.assign(1, start);
    seen_stamp_[start] = stamp_;
    int min_degree = std::numeric_limits<int>::max();
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int degree = 0;
      for (ClassIndex d : q_->neighbors(queue_[head])) {
        if (removed_stamp_[d] == stamp_) continue;
        ++degree;
        if (seen_stamp_[d] != stamp_) {
          seen_stamp_[d] = stamp_;
          queue_.push_back(d);
        }
      }
      min_degree = std::min(min_degree, degree);
    }
    if (queue_.size() < class_threshold || min_degree < degree_threshold) return false;
  }
  return components >= 2;
}

const char* search_route_name(SearchRoute route) {
  switch (route) {
    case SearchRoute::kAuto: return "auto";
    case SearchRoute::kBruteForce: return "brute";
    case SearchRoute::kQuotient: return "quotient";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct LevelOutcome {
  std::uint64_t examined = 0;
  std::optional<std::vector<VertexIndex>> best;
};

// Scans every k-subset of {0..m-1}. Work is split by the smallest element;
// each worker keeps its lexicographically smallest witness and the merge
// takes the overall minimum, so the outcome does not depend on scheduling.
template <typename MakeTest, typename Lift>
LevelOutcome scan_level(std::uint32_t m, std::uint32_t k, unsigned workers, MakeTest make_test,
                        Lift lift) {
  LevelOutcome merged;
  if (k == 0 || k > m) return merged;
  std::atomic<std::uint32_t> next_prefix{0};
  std::mutex merge_mutex;

  auto work = [&] {
    auto test = make_test();
    LevelOutcome local;
    std::vector<std::uint32_t> combo(k);
    for (;;) {
      const std::uint32_t p = next_prefix.fetch_add(1);
      if (p > m - k) break;
      for (std::uint32_t j = 0; j < k; ++j) combo[j] = p + j;
      for (;;) {
        ++local.examined;
        if (test(std::span<const std::uint32_t>(combo))) {
          auto witness = lift(std::span<const std::uint32_t>(combo));
          if (!local.best || witness < *local.best) local.best = std::move(witness);
        }
        // Advance positions 1..k-1, keeping combo[0] == p.
        std::uint32_t i = k - 1;
        while (i >= 1 && combo[i] == m - k + i) --i;
        if (i == 0) break;
        ++combo[i];
        for (std::uint32_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      }
    }
    std::lock_guard lock(merge_mutex);
    merged.examined += local.examined;
    if (local.best && (!merged.best || *local.best < *merged.best)) merged.best = local.best;
  };

  const unsigned count = std::max(1u, std::min(workers, m - k + 1));
  if (count == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(work);
  }
  return merged;
}

void check_restricted_param(const CubeGraph& g, int h) {
  if (h < 0 || h >= g.degree()) {
    throw Error(ErrorCode::kParameter,
                "restricted h must lie in 0.." + std::to_string(g.degree() - 1));
  }
}

void check_spec(const CubeGraph& g, const CutSpec& spec) {
  if (spec.kind == CutKind::kRestricted) check_restricted_param(g, spec.param);
  if (spec.kind == CutKind::kGExtra && spec.param < 0) {
    throw Error(ErrorCode::kParameter, "extra g must be nonnegative");
  }
}

// Independent re-check of a witness through the analysis predicates.
void confirm_witness(const CubeGraph& g, const SolverResult& result) {
  if (!result.witness) return;
  const FaultSet f(g, *result.witness);
  if (!evaluate_cut(g, f, result.spec).is_cut) {
    throw Error(ErrorCode::kSoundness, "solver witness fails the direct cut predicate");
  }
}

std::vector<ClassIndex> random_subset(std::mt19937_64& rng, std::uint32_t m, std::uint32_t k) {
  std::vector<ClassIndex> pool(m);
  for (std::uint32_t i = 0; i < m; ++i) pool[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::uint32_t> pick(i, m - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

SolverResult quotient_search(const CubeGraph& g, const CutSpec& spec, int bound,
                             const SearchOptions& options) {
  const auto start = Clock::now();
  if (bound < 1 || static_cast<std::size_t>(bound) >= g.vertex_count()) {
    throw Error(ErrorCode::kParameter,
                "bound must lie in 1.." + std::to_string(g.vertex_count() - 1));
  }
  const QuotientGraph q = build_quotient(g);
  const auto m = static_cast<std::uint32_t>(q.class_count());
  const auto max_classes = static_cast<std::uint32_t>(bound / 2);
  const std::uint64_t estimate = binomial_sum(m, 1, max_classes);
  if (estimate > options.work_budget) throw BudgetExceeded(estimate, options.work_budget);

  if (options.lift_check_samples > 0) {
    LiftCheckOptions check;
    check.sample_budget = options.lift_check_samples;
    require_sound(verify_lift_equivalence(g, q, check));
  }

  SolverResult result;
  result.spec = spec;
  result.n = g.dimension();
  result.bound = bound;
  result.coverage.quotient_used = true;
  result.coverage.universe = m;

  auto make_test = [&] {
    return [&spec, tester = QuotientTester(q)](std::span<const std::uint32_t> classes) mutable {
      return tester.test(classes, spec);
    };
  };
  auto lift = [&q](std::span<const std::uint32_t> classes) { return q.lift(classes); };

  for (std::uint32_t k = 1; k <= max_classes; ++k) {
    const LevelOutcome level = scan_level(m, k, options.workers, make_test, lift);
    result.coverage.sizes_searched.push_back(static_cast<int>(k));
    result.coverage.subsets_examined += level.examined;
    if (level.best) {
      result.value = static_cast<int>(level.best->size());
      result.witness = level.best;
      break;
    }
  }
  confirm_witness(g, result);
  result.elapsed_ms = elapsed_since(start);
  return result;
}

bool brute_force_preferred(const CubeGraph& g, const CutSpec& spec, const SearchOptions& options) {
  switch (options.route) {
    case SearchRoute::kBruteForce: return true;
    case SearchRoute::kQuotient: return false;
    case SearchRoute::kAuto: break;
  }
  return g.dimension() <= 2 || spec.kind == CutKind::kPlain || spec.param == 0;
}

}  // namespace

SolverResult brute_force_min_cut(const CubeGraph& g, const CutSpec& spec, int bound,
                                 const SearchOptions& options) {
  const auto start = Clock::now();
  check_spec(g, spec);
  if (bound < 1) throw Error(ErrorCode::kParameter, "bound must be at least 1");
  const auto m = static_cast<std::uint32_t>(g.vertex_count());
  const auto max_size = std::min<std::uint32_t>(static_cast<std::uint32_t>(bound), m - 1);
  const std::uint64_t estimate = binomial_sum(m, 1, max_size);
  if (estimate > options.work_budget) throw BudgetExceeded(estimate, options.work_budget);

  SolverResult result;
  result.spec = spec;
  result.n = g.dimension();
  result.bound = bound;
  result.coverage.universe = m;

  auto make_test = [&] {
    return [&spec, tester = CutTester(g)](std::span<const std::uint32_t> removed) mutable {
      return tester.test(removed, spec);
    };
  };
  auto lift = [](std::span<const std::uint32_t> removed) {
    return std::vector<VertexIndex>(removed.begin(), removed.end());
  };

  for (std::uint32_t k = 1; k <= max_size; ++k) {
    const LevelOutcome level = scan_level(m, k, options.workers, make_test, lift);
    result.coverage.sizes_searched.push_back(static_cast<int>(k));
    result.coverage.subsets_examined += level.examined;
    if (level.best) {
      result.value = static_cast<int>(k);
      result.witness = level.best;
      break;
    }
  }
  confirm_witness(g, result);
  result.elapsed_ms = elapsed_since(start);
  return result;
}

SolverResult quotient_min_restricted_cut(const CubeGraph& g, int h, int bound,
                                         const SearchOptions& options) {
  if (h == 0) {
    throw Error(ErrorCode::kParameter,
                "quotient search needs h >= 1: isolated vertices break the reduction");
  }
  check_restricted_param(g, h);
  return quotient_search(g, {CutKind::kRestricted, h}, bound, options);
}

SolverResult g_extra_min_cut(const CubeGraph& g, int gparam, int bound,
                             const SearchOptions& options) {
  const CutSpec spec{CutKind::kGExtra, gparam};
  check_spec(g, spec);
  if (brute_force_preferred(g, spec, options)) return brute_force_min_cut(g, spec, bound, options);
  if (gparam == 0) throw Error(ErrorCode::kParameter, "quotient search needs g >= 1");
  return quotient_search(g, spec, bound, options);
}

SolverResult min_cut(const CubeGraph& g, const CutSpec& spec, int bound,
                     const SearchOptions& options) {
  check_spec(g, spec);
  switch (spec.kind) {
    case CutKind::kPlain:
      if (options.route == SearchRoute::kQuotient) {
        throw Error(ErrorCode::kParameter, "plain cuts have no quotient route");
      }
      return brute_force_min_cut(g, spec, bound, options);
    case CutKind::kGExtra:
      return g_extra_min_cut(g, spec.param, bound, options);
    case CutKind::kRestricted:
      if (brute_force_preferred(g, spec, options)) {
        return brute_force_min_cut(g, spec, bound, options);
      }
      return quotient_min_restricted_cut(g, spec.param, bound, options);
  }
  throw Error(ErrorCode::kInternal, "unhandled cut kind");
}

LiftReport verify_lift_equivalence(const CubeGraph& g, const QuotientGraph& q,
                                   const LiftCheckOptions& options) {
  if (q.dimension() != g.dimension()) {
    throw Error(ErrorCode::kParameter, "quotient was built from a different graph");
  }
  std::vector<CutSpec> specs;
  for (int h = 1; h <= 4 && h < g.degree(); ++h) specs.push_back({CutKind::kRestricted, h});
  for (int x = 1; x <= 5; ++x) specs.push_back({CutKind::kGExtra, x});

  LiftReport report;
  QuotientTester tester(q);
  const auto m = static_cast<std::uint32_t>(q.class_count());

  auto check = [&](const std::vector<ClassIndex>& classes) {
    ++report.subsets_checked;
    const ComponentReport direct = components(g, FaultSet(g, q.lift(classes)));
    for (const CutSpec& spec : specs) {
      const CutVerdict verdict = spec.kind == CutKind::kRestricted
                                     ? restricted_verdict(direct, spec.param)
                                     : g_extra_verdict(direct, spec.param);
      const bool quotient = tester.test(classes, spec);
      ++report.verdicts_compared;
      if (verdict.is_cut) ++report.cuts_seen;
      if (quotient != verdict.is_cut && report.mismatches.size() < 16) {
        report.mismatches.push_back({classes, spec, quotient, verdict.is_cut});
      }
    }
  };

  std::vector<ClassIndex> classes;
  if (m <= options.exhaustive_class_limit) {
    report.exhaustive = true;
    // Every proper subset, including the empty one.
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      classes.clear();
      for (std::uint32_t c = 0; c < m; ++c) {
        if (mask >> c & 1u) classes.push_back(c);
      }
      check(classes);
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> size(1, m - 1);
    for (std::uint64_t i = 0; i < options.sample_budget; ++i) {
      check(random_subset(rng, m, size(rng)));
    }
  }
  return report;
}

void require_sound(const LiftReport& report) {
  if (report.sound()) return;
  const LiftMismatch& first = report.mismatches.front();
  throw Error(ErrorCode::kSoundness,
              "quotient verdict disagrees with the direct predicate for " +
                  std::string(cut_kind_name(first.spec.kind)) + " " +
                  std::to_string(first.spec.param) + " on " +
                  std::to_string(first.classes.size()) + " classes");
}

}  // namespace bhcut

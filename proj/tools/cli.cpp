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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bhcut/analysis.hpp"
#include "bhcut/constructions.hpp"
#include "bhcut/error.hpp"
#include "bhcut/serialize.hpp"
#include "bhcut/solver.hpp"
#include "bhcut/topology.hpp"

namespace bhcut::cli {
namespace {

struct RunConfig {
  std::string command;
  int n = 0;
  std::string kind = "restricted";
  std::optional<int> h;
  std::optional<int> g;
  std::optional<int> bound;
  unsigned workers = 1;
  std::string out;
  std::string format;
  std::uint64_t budget = SearchOptions{}.work_budget;
  std::string route = "auto";
  bool timing = false;
  // gen
  std::string mode = "direct";
  bool check_recursive = false;
  bool no_check = false;
  // oracle
  std::uint64_t samples = 100'000;
  // sweep
  int n_min = 2;
  int n_max = 3;
  int p_min = 1;
  int p_max = 4;
};

// A finished report plus its exit status.
struct Report {
  std::string body;
  std::string extension;
  int status = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format " + format);
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions options;
  options.work_budget = cfg.budget;
  options.workers = cfg.workers;
  if (cfg.route == "auto") {
    options.route = SearchRoute::kAuto;
  } else if (cfg.route == "brute") {
    options.route = SearchRoute::kBruteForce;
  } else if (cfg.route == "quotient") {
    options.route = SearchRoute::kQuotient;
  } else {
    throw UsageError("unknown --route " + cfg.route);
  }
  return options;
}

CutSpec solve_spec(const RunConfig& cfg) {
  const CutKind kind = parse_cut_kind(cfg.kind);
  switch (kind) {
    case CutKind::kPlain: return {kind, 0};
    case CutKind::kRestricted:
      if (!cfg.h) throw UsageError("--kind restricted needs --h");
      return {kind, *cfg.h};
    case CutKind::kGExtra:
      if (!cfg.g) throw UsageError("--kind extra needs --g");
      return {kind, *cfg.g};
  }
  throw UsageError("unknown kind");
}

// Budgets are mandatory from n = 3 on; small cubes default to all proper
// fault sets that can leave two vertices.
int resolve_bound(const std::optional<int>& bound, int n) {
  if (bound) {
    if (*bound < 1) throw UsageError("--bound must be at least 1");
    return *bound;
  }
  if (n >= 3) throw UsageError("--bound is required for n >= 3");
  return static_cast<int>(pow4(n)) - 2;
}

Report cmd_gen(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"text", "json", "csv"});
  if (cfg.mode != "direct" && cfg.mode != "recursive") throw UsageError("unknown --mode " + cfg.mode);
  const CubeGraph graph = cfg.mode == "direct" ? build_direct(cfg.n) : build_recursive(cfg.n);
  Report report;
  if (!cfg.no_check || cfg.check_recursive) {
    const CubeGraph other = cfg.mode == "direct" ? build_recursive(cfg.n) : build_direct(cfg.n);
    if (other.edges() != graph.edges()) report.status = kCheckFailed;
  }
  if (format == "json") {
    report.body = dump(graph_json(graph));
    report.extension = "json";
  } else if (format == "csv") {
    report.body = edges_csv(graph);
    report.extension = "csv";
  } else {
    report.body = adjacency_text(graph);
    report.extension = "txt";
  }
  return report;
}

struct PropertyLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<PropertyLine> structural_properties(const CubeGraph& g) {
  const int n = g.dimension();
  std::vector<PropertyLine> lines;
  auto add = [&](std::string name, bool pass, std::string detail) {
    lines.push_back({std::move(name), pass, std::move(detail)});
  };

  add("generator_equivalence", build_recursive(n).edges() == g.edges(),
      std::to_string(g.edge_count()) + " edges compared");

  add("regularity", g.edges().size() == g.edge_count() && g.degree() == 2 * n,
      std::to_string(g.vertex_count()) + " vertices, degree " + std::to_string(g.degree()) +
          ", " + std::to_string(g.edges().size()) + " edges");

  const Bipartition parts = bipartition(g);
  const std::size_t mono = count_monochromatic_edges(g);
  add("bipartite", mono == 0 && parts.white.size() == parts.black.size(),
      std::to_string(g.edges().size()) + " edges, " + std::to_string(mono) +
          " monochromatic, |V0|=" + std::to_string(parts.white.size()) +
          " |V1|=" + std::to_string(parts.black.size()));

  std::size_t partner_ok = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto a = g.neighbors(v);
    const auto b = g.neighbors(partner_index(v));
    if (std::equal(a.begin(), a.end(), b.begin(), b.end())) ++partner_ok;
  }
  add("partner_neighborhood", partner_ok == g.vertex_count(),
      std::to_string(partner_ok) + "/" + std::to_string(g.vertex_count()) + " vertices");

  if (n >= 2) {
    const SubcubeSplit split = split_subcubes(g);
    const std::size_t expected = pow4(n - 1);
    bool ok = true;
    std::string detail;
    for (int k = 0; k < 4; ++k) {
      const std::size_t count = split.cross_edges[static_cast<std::size_t>(k)].size();
      ok = ok && count == expected;
      detail += "B" + std::to_string(k) + "-B" + std::to_string((k + 1) % 4) + "=" +
                std::to_string(count) + " ";
    }
    for (int k = 0; k < 2; ++k) {
      const std::size_t count =
          count_edges_between(g, split.parts[static_cast<std::size_t>(k)],
                              split.parts[static_cast<std::size_t>(k + 2)]);
      ok = ok && count == 0;
      detail += "B" + std::to_string(k) + "-B" + std::to_string(k + 2) + "=" +
                std::to_string(count) + (k == 0 ? " " : "");
    }
    add("cross_edges", ok, detail);

    const CubeGraph lower = build_direct(n - 1);
    bool same = true;
    for (int k = 0; k < 4; ++k) same = same && subcube_graph(g, split, k) == lower;
    add("subcubes", same, "4 copies of BH_" + std::to_string(n - 1));
  }
  return lines;
}

Report cmd_props(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_format(format, {"text", "json", "csv"});
  const CubeGraph graph = build_direct(cfg.n);
  const auto lines = structural_properties(graph);
  Report report;
  const bool all =
      std::all_of(lines.begin(), lines.end(), [](const PropertyLine& l) { return l.pass; });
  report.status = all ? kOk : kCheckFailed;
  std::ostringstream out;
  if (format == "json") {
    Json j;
    j["n"] = cfg.n;
    Json props = Json::array();
    for (const auto& l : lines) {
      props.push_back(Json{{"property", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    }
    j["properties"] = std::move(props);
    j["pass"] = all;
    report.body = dump(j);
    report.extension = "json";
  } else if (format == "csv") {
    out << "property,pass,detail\n";
    for (const auto& l : lines) out << l.name << ',' << (l.pass ? "true" : "false") << ",\"" << l.detail << "\"\n";
    report.body = out.str();
    report.extension = "csv";
  } else {
    for (const auto& l : lines) out << (l.pass ? "PASS " : "FAIL ") << l.name << ": " << l.detail << '\n';
    report.body = out.str();
    report.extension = "txt";
  }
  return report;
}

std::string solve_csv_header() {
  return "n,kind,param,value,witness_size,verdict,subsets_examined,elapsed_ms\n";
}

std::string solve_csv_row(const SolverResult& r, bool timing) {
  std::ostringstream out;
  out << r.n << ',' << cut_kind_name(r.spec.kind) << ',' << r.spec.param << ',';
  if (r.value) out << *r.value;
  out << ',';
  if (r.witness) out << r.witness->size();
  out << ',' << (r.value ? "found" : "none") << ',' << r.coverage.subsets_examined << ',';
  if (timing) out << r.elapsed_ms;
  out << '\n';
  return out.str();
}

Report cmd_solve(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"text", "json", "csv"});
  const CutSpec spec = solve_spec(cfg);
  const int bound = resolve_bound(cfg.bound, cfg.n);
  const CubeGraph graph = build_direct(cfg.n);
  const SolverResult result = min_cut(graph, spec, bound, search_options(cfg));
  Report report;
  if (format == "json") {
    report.body = dump(to_json(result, cfg.timing));
    report.extension = "json";
  } else if (format == "csv") {
    report.body = solve_csv_header() + solve_csv_row(result, cfg.timing);
    report.extension = "csv";
  } else {
    std::ostringstream out;
    out << "BH_" << result.n << ' ' << cut_kind_name(spec.kind) << ' ' << spec.param << ": ";
    if (result.value) {
      out << "value " << *result.value << ", witness";
      for (VertexIndex v : *result.witness) out << ' ' << graph.vertex(v).to_string();
    } else {
      out << "none <= " << bound;
    }
    out << "\nexamined " << result.coverage.subsets_examined << " subsets over "
        << result.coverage.universe << (result.coverage.quotient_used ? " classes" : " vertices")
        << '\n';
    report.body = out.str();
    report.extension = "txt";
  }
  return report;
}

Json verify_json(const CubeGraph& g, const UpperBoundCertificate& cert,
                 const std::vector<AnomalyReport>& anomalies) {
  Json j = to_json(cert);
  Json checks = Json::array();
  for (const auto& a : anomalies) checks.push_back(to_json(a));
  j["common_neighbor_checks"] = std::move(checks);
  (void)g;
  return j;
}

bool verify_ok(const UpperBoundCertificate& cert, const std::vector<AnomalyReport>& anomalies) {
  return cert.ok() && std::all_of(anomalies.begin(), anomalies.end(),
                                  [](const AnomalyReport& a) { return a.ok(); });
}

std::vector<AnomalyReport> anomaly_reports(const CubeGraph& g) {
  std::vector<AnomalyReport> out;
  for (int i = 1; i <= g.dimension() - 3; ++i) out.push_back(anomaly_common_neighbors(g, i));
  return out;
}

Report cmd_verify(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"text", "json"});
  if (cfg.n < 3) throw UsageError("verify needs --n >= 3");
  const CubeGraph graph = build_direct(cfg.n);
  const UpperBoundCertificate cert = verify_upper_bound(graph);
  const auto anomalies = anomaly_reports(graph);
  Report report;
  report.status = verify_ok(cert, anomalies) ? kOk : kCheckFailed;
  if (format == "json") {
    report.body = dump(verify_json(graph, cert, anomalies));
    report.extension = "json";
  } else {
    std::ostringstream out;
    out << "BH_" << cert.n << ": cut size " << cert.cut_size << ", verdict " << cert.verdict
        << " (expected " << cert.expected_verdict << ")\n";
    for (const auto& c : cert.components) {
      out << "  component size " << c.size << ", min degree " << c.min_degree
          << (c.contains_tee ? ", contains T" : "") << '\n';
    }
    if (!cert.anomaly_vertices.empty()) {
      out << "  degree-2 vertices:";
      for (const Vertex& v : cert.anomaly_vertices) out << ' ' << v.to_string();
      out << '\n';
    }
    for (const auto& note : cert.notes) out << "  note: " << note << '\n';
    out << (report.status == kOk ? "OK\n" : "MISMATCH\n");
    report.body = out.str();
    report.extension = "txt";
  }
  return report;
}

Report cmd_oracle(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"text", "json"});
  const CubeGraph graph = build_direct(cfg.n);
  const QuotientGraph quotient = build_quotient(graph);
  LiftCheckOptions check;
  check.sample_budget = cfg.samples;
  const LiftReport lift = verify_lift_equivalence(graph, quotient, check);

  // Brute force against the quotient route wherever brute force is cheap.
  Json agreement = Json::array();
  bool agree = true;
  if (cfg.n <= 2) {
    const int max_bound = std::min<int>(6, static_cast<int>(pow4(cfg.n)) - 1);
    SearchOptions options = search_options(cfg);
    options.lift_check_samples = 0;
    for (int h = 1; h < graph.degree(); ++h) {
      for (int bound = 1; bound <= max_bound; ++bound) {
        const auto brute = brute_force_min_cut(graph, {CutKind::kRestricted, h}, bound, options);
        const auto quot = quotient_min_restricted_cut(graph, h, bound, options);
        const bool same = brute.value == quot.value;
        agree = agree && same;
        agreement.push_back(Json{{"h", h},
                                 {"bound", bound},
                                 {"brute", brute.value ? Json(*brute.value) : Json()},
                                 {"quotient", quot.value ? Json(*quot.value) : Json()},
                                 {"agree", same}});
      }
    }
  }
  Report report;
  report.status = lift.sound() && agree ? kOk : kCheckFailed;
  if (format == "json") {
    Json j;
    j["n"] = cfg.n;
    j["classes"] = quotient.class_count();
    j["lift_equivalence"] = to_json(lift);
    j["brute_vs_quotient"] = std::move(agreement);
    j["pass"] = report.status == kOk;
    report.body = dump(j);
    report.extension = "json";
  } else {
    std::ostringstream out;
    out << "BH_" << cfg.n << " quotient: " << quotient.class_count() << " classes, "
        << lift.subsets_checked << (lift.exhaustive ? " subsets (exhaustive), " : " subsets (sampled), ")
        << lift.mismatches.size() << " mismatches\n";
    if (cfg.n <= 2) out << "brute force vs quotient: " << (agree ? "agree" : "DISAGREE") << '\n';
    report.body = out.str();
    report.extension = "txt";
  }
  return report;
}

Report cmd_sweep(const RunConfig& cfg) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  require_format(format, {"text", "json", "csv"});
  const bool verify = cfg.kind == "verify";
  if (!verify) parse_cut_kind(cfg.kind);
  if (!verify && cfg.n_max >= 3 && cfg.n_min <= cfg.n_max && !cfg.bound) {
    throw UsageError("--bound is required when the sweep reaches n >= 3");
  }

  struct Row {
    int n;
    std::string kind;
    int param;
    std::string value;
    std::string witness_size;
    std::string verdict;
    std::uint64_t subsets = 0;
    double elapsed = 0;
  };
  std::vector<Row> rows;
  Report report;
  auto worst = [&](int status) {
    if (report.status == kOk || (status == kBudgetRefused && report.status == kCheckFailed)) {
      report.status = status;
    }
  };

  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    if (verify) {
      const CubeGraph graph = build_direct(n);
      const auto start = std::chrono::steady_clock::now();
      const UpperBoundCertificate cert = verify_upper_bound(graph);
      const auto anomalies = anomaly_reports(graph);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (!verify_ok(cert, anomalies)) worst(kCheckFailed);
      rows.push_back({n, "upper_bound", 4, std::to_string(cert.cut_size),
                      std::to_string(cert.cut_size), cert.verdict, 0, ms});
      continue;
    }
    const CubeGraph graph = build_direct(n);
    for (int p = cfg.p_min; p <= cfg.p_max; ++p) {
      const CutSpec spec{parse_cut_kind(cfg.kind), p};
      Row row{n, cut_kind_name(spec.kind), p, "", "", "", 0, 0};
      if (spec.kind == CutKind::kRestricted && (p < 0 || p >= graph.degree())) {
        row.verdict = "not_applicable";
        rows.push_back(std::move(row));
        continue;
      }
      try {
        const int bound = std::min(resolve_bound(cfg.bound, n), static_cast<int>(pow4(n)) - 1);
        const SolverResult r = min_cut(graph, spec, bound, search_options(cfg));
        if (r.value) row.value = std::to_string(*r.value);
        if (r.witness) row.witness_size = std::to_string(r.witness->size());
        row.verdict = r.value ? "found" : "none";
        row.subsets = r.coverage.subsets_examined;
        row.elapsed = r.elapsed_ms;
      } catch (const BudgetExceeded& e) {
        row.verdict = "budget_exceeded";
        worst(kBudgetRefused);
      } catch (const Error& e) {
        row.verdict = std::string("error:") + error_code_name(e.code());
        worst(kCheckFailed);
      }
      rows.push_back(std::move(row));
    }
  }

  if (format == "json") {
    Json j = Json::array();
    for (const Row& r : rows) {
      Json item;
      item["n"] = r.n;
      item["kind"] = r.kind;
      item["param"] = r.param;
      item["value"] = r.value.empty() ? Json() : Json(std::stoi(r.value));
      item["witness_size"] = r.witness_size.empty() ? Json() : Json(std::stoi(r.witness_size));
      item["verdict"] = r.verdict;
      item["subsets_examined"] = r.subsets;
      item["elapsed_ms"] = cfg.timing ? Json(r.elapsed) : Json();
      j.push_back(std::move(item));
    }
    report.body = dump(j);
    report.extension = "json";
  } else {
    std::ostringstream out;
    out << solve_csv_header();
    for (const Row& r : rows) {
      out << r.n << ',' << r.kind << ',' << r.param << ',' << r.value << ',' << r.witness_size
          << ',' << r.verdict << ',' << r.subsets << ',';
      if (cfg.timing) out << r.elapsed;
      out << '\n';
    }
    report.body = out.str();
    report.extension = "csv";
  }
  return report;
}

int emit(const RunConfig& cfg, const Report& report, std::ostream& out, std::ostream& err) {
  std::filesystem::path path;
  if (!cfg.out.empty()) {
    path = cfg.out;
  } else if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
    std::string name = cfg.command;
    if (cfg.command != "sweep") name += "_n" + std::to_string(cfg.n);
    path = std::filesystem::path(dir) / (name + "." + report.extension);
  }
  if (path.empty()) {
    out << report.body;
    return report.status;
  }
  std::ofstream file(path, std::ios::binary);
  file << report.body;
  file.close();
  if (!file) {
    err << "error: cannot write " << path.string() << '\n';
    return kIoError;
  }
  return report.status;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-o,--out", cfg.out, "Output file (default: stdout or $BHCUT_OUT_DIR)");
  sub->add_option("--format", cfg.format, "json, csv or text");
}

void add_search(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--bound", cfg.bound, "Largest fault-set size searched");
  sub->add_option("--budget", cfg.budget, "Maximum number of subsets examined");
  sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--route", cfg.route, "auto, brute or quotient");
  sub->add_flag("--timing", cfg.timing, "Record elapsed_ms in reports");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Balanced hypercube restricted-connectivity toolkit", "bhcut"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Export the adjacency of BH_n");
  gen->add_option("--n", cfg.n, "Dimension")->required();
  gen->add_option("--mode", cfg.mode, "direct or recursive");
  gen->add_flag("--check-recursive", cfg.check_recursive, "Cross-check both generators");
  gen->add_flag("--no-check", cfg.no_check, "Skip the generator cross-check");
  add_common(gen, cfg);

  auto* props = app.add_subcommand("props", "Run the structural property suite");
  props->add_option("--n", cfg.n, "Dimension")->required();
  add_common(props, cfg);

  auto* solve = app.add_subcommand("solve", "Compute a minimum restricted or extra cut");
  solve->add_option("--n", cfg.n, "Dimension")->required();
  solve->add_option("--kind", cfg.kind, "restricted, extra or plain");
  solve->add_option("--h", cfg.h, "Restricted degree bound");
  solve->add_option("--g", cfg.g, "Extra component-size bound");
  add_search(solve, cfg);
  add_common(solve, cfg);

  auto* verify = app.add_subcommand("verify", "Certify the 12n-24 construction");
  verify->add_option("--n", cfg.n, "Dimension")->required();
  add_common(verify, cfg);

  auto* oracle = app.add_subcommand("oracle", "Cross-check the quotient reduction");
  oracle->add_option("--n", cfg.n, "Dimension")->required();
  oracle->add_option("--samples", cfg.samples, "Sampled class subsets on large quotients");
  add_search(oracle, cfg);
  add_common(oracle, cfg);

  auto* sweep = app.add_subcommand("sweep", "Solve or verify over a parameter grid");
  sweep->add_option("--n-min", cfg.n_min, "Smallest dimension");
  sweep->add_option("--n-max", cfg.n_max, "Largest dimension");
  sweep->add_option("--kind", cfg.kind, "restricted, extra, plain or verify");
  sweep->add_option("--h-min,--g-min,--param-min", cfg.p_min, "Smallest cut parameter");
  sweep->add_option("--h-max,--g-max,--param-max", cfg.p_max, "Largest cut parameter");
  add_search(sweep, cfg);
  add_common(sweep, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Report report;
    if (gen->parsed()) {
      cfg.command = "gen";
      report = cmd_gen(cfg);
    } else if (props->parsed()) {
      cfg.command = "props";
      report = cmd_props(cfg);
    } else if (solve->parsed()) {
      cfg.command = "solve";
      report = cmd_solve(cfg);
    } else if (verify->parsed()) {
      cfg.command = "verify";
      report = cmd_verify(cfg);
    } else if (oracle->parsed()) {
      cfg.command = "oracle";
      report = cmd_oracle(cfg);
    } else {
      cfg.command = "sweep";
      report = cmd_sweep(cfg);
    }
    return emit(cfg, report, out, err);
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kBudgetRefused;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::kSoundness || e.code() == ErrorCode::kCertificate ? kCheckFailed
                                                                                     : kUsage;
  }
}

}  // namespace bhcut::cli

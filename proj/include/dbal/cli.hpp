// cli.hpp - command-line front end: check, scan, partition, predict, export,
// probe. Exit codes: 0 success / all balanced, 1 some ell unbalanced (check),
// 2 usage error, 3 prediction contradicted by BFS (scan).
#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dbal/balance.hpp"
#include "dbal/gp.hpp"
#include "dbal/io.hpp"
#include "dbal/oracle.hpp"
#include "dbal/scan.hpp"

namespace dbal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnbalanced = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

enum class Format { Human, Json, Csv };

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

// "a..b" or a single integer "a".
inline IntRange parse_range(std::string_view s, std::string_view what) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(s, what);
    return {v, v};
  }
  IntRange r{parse_int(s.substr(0, dots), what), parse_int(s.substr(dots + 2), what)};
  if (r.lo > r.hi) throw UsageError("empty " + std::string(what) + " range '" + std::string(s) + "'");
  return r;
}

// "1,2,5" or "all".
inline EllSet parse_ells(const std::string& s) {
  if (s == "all") return {};
  EllSet set;
  std::string_view rest = s;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto ell = parse_int(item, "ell");
    if (ell < 1) throw UsageError("ell must be >= 1");
    set.explicit_ells.push_back(static_cast<int>(ell));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (set.explicit_ells.empty()) throw UsageError("empty ell list");
  return set;
}

struct Options {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string ells = "1";
  bool no_symmetry = false;
  std::string graph_path;
  Format format = Format::Human;
  int verbosity = 0;

  // scan
  std::string k_range;
  std::string n_range;
  std::string n_offset;
  std::string n_base = "kk2";
  unsigned workers = 0;
  std::string output;
  std::int64_t time_budget_ms = 0;
  bool timing = false;
  bool no_bounds = false;

  // partition
  std::string x_spec;
  std::string y_spec;
  bool with_sets = false;
};

namespace detail {

inline void print_verdict(std::ostream& out, const Verdict& v, const Graph& g, Format format) {
  if (format == Format::Json) {
    out << verdict_json(v, g).dump() << "\n";
    return;
  }
  if (const auto& label = g.label()) {
    out << "GP(" << label->n << "," << label->k << ")";
  } else {
    out << "graph(" << g.vertex_count() << " vertices)";
  }
  out << " ell=" << v.ell << ": " << (v.balanced ? "balanced" : "unbalanced");
  if (v.witness) {
    out << " witness=(" << g.vertex_name(v.witness->x) << "," << g.vertex_name(v.witness->y)
        << ") closer_x=" << v.witness->closer_x << " closer_y=" << v.witness->closer_y;
  }
  out << " pairs_checked=" << v.pairs_checked << "\n";
}

inline Graph load_graph(const Options& o) {
  if (!o.graph_path.empty()) {
    std::ifstream in(o.graph_path);
    if (!in) throw UsageError("cannot open " + o.graph_path);
    return read_edge_list(in);
  }
  return gp_construct(o.n, o.k);
}

}  // namespace detail

inline int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = detail::load_graph(o);
  const EllSet ells = parse_ells(o.ells);
  const bool symmetric = !o.no_symmetry && g.label().has_value();
  std::vector<int> list = ells.explicit_ells;
  if (ells.all_up_to_diameter()) {
    for (int ell = 1; ell <= diameter(g); ++ell) list.push_back(ell);
  }
  if (o.format == Format::Csv) throw UsageError("check supports --format human|json");
  bool all_balanced = true;
  for (int ell : list) {
    const Verdict v = is_l_distance_balanced(g, ell, symmetric);
    all_balanced = all_balanced && v.balanced;
    detail::print_verdict(out, v, g, o.format);
  }
  return all_balanced ? kExitOk : kExitUnbalanced;
}

inline ScanRequest scan_request(const Options& o) {
  if (o.k_range.empty()) throw UsageError("scan needs --k");
  if (o.n_range.empty() == o.n_offset.empty()) throw UsageError("scan needs exactly one of --n, --n-offset");
  ScanRequest req;
  req.k_range = parse_range(o.k_range, "k");
  if (!o.n_range.empty()) {
    req.n_rule = ExplicitN{parse_range(o.n_range, "n")};
  } else {
    if (o.n_base != "kk2" && o.n_base != "nk") throw UsageError("--n-base must be kk2 or nk");
    req.n_rule = OffsetN{o.n_base == "kk2" ? NBase::KTimesKPlus2 : NBase::ConjecturedNk,
                         parse_range(o.n_offset, "n offset")};
  }
  req.ells = parse_ells(o.ells);
  req.symmetry = !o.no_symmetry;
  req.workers = o.workers;
  if (o.time_budget_ms > 0) req.time_budget = std::chrono::milliseconds(o.time_budget_ms);
  req.record_timing = o.timing;
  req.with_bounds = !o.no_bounds;
  return req;
}

inline int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const ScanRequest req = scan_request(o);
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw UsageError("cannot write " + o.output);
  }
  std::ostream& sink_stream = o.output.empty() ? out : file;
  if (o.format == Format::Csv) sink_stream << kCsvHeader << "\n";
  const ScanSummary summary = run_scan(req, [&](const ScanRecord& r) {
    switch (o.format) {
      case Format::Json: sink_stream << record_json(r).dump() << "\n"; break;
      case Format::Csv: sink_stream << record_csv(r) << "\n"; break;
      case Format::Human: sink_stream << record_human(r) << "\n"; break;
    }
    if (r.conjecture_signal) {
      err << "CONJECTURE SIGNAL: GP(" << r.n << "," << r.k << ") is " << r.ell
          << "-distance-balanced with n > n_k\n";
    }
  });
  sink_stream.flush();
  err << "graphs=" << summary.graphs << " records=" << summary.records << " mismatches=" << summary.mismatches
      << " bound_failures=" << summary.bound_failures << " errors=" << summary.errors
      << " timeouts=" << summary.timeouts << " conjecture_signals=" << summary.conjecture_signals << "\n";
  return summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

inline int cmd_partition(const Options& o, std::ostream& out) {
  const Graph g = gp_construct(o.n, o.k);
  const auto n = static_cast<std::uint32_t>(o.n);
  const Vertex x = g.vertex(parse_vertex(o.x_spec, n));
  const Vertex y = g.vertex(parse_vertex(o.y_spec, n));
  const BalancePartition p = partition(g, x, y, o.with_sets);
  if (o.format == Format::Json) {
    json j = partition_json(p, g);
    j["n"] = o.n;
    j["k"] = o.k;
    j["distance"] = bfs_distances(g, x).dist[y];
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "GP(" << o.n << "," << o.k << ") x=" << g.vertex_name(x) << " y=" << g.vertex_name(y)
      << " distance=" << bfs_distances(g, x).dist[y] << " closer_x=" << p.closer_x << " closer_y=" << p.closer_y
      << " tie=" << p.tie << " lemma_x=" << (lemma_holds(p) ? "true" : "false")
      << " lemma_y=" << (2 * p.closer_y + p.tie > p.total() ? "true" : "false") << "\n";
  if (p.sets) {
    auto list = [&](std::string_view name, const std::vector<Vertex>& vs) {
      out << name << ":";
      for (Vertex v : vs) out << " " << g.vertex_name(v);
      out << "\n";
    };
    list("closer_x", p.sets->closer_x);
    list("closer_y", p.sets->closer_y);
    list("tie", p.sets->tie);
  }
  return kExitOk;
}

inline int cmd_predict(const Options& o, std::ostream& out) {
  const EllSet ells = parse_ells(o.ells);
  if (ells.all_up_to_diameter()) throw UsageError("predict needs explicit ell values");
  for (int ell : ells.explicit_ells) {
    const Prediction p = predict(o.n, o.k, ell);
    if (o.format == Format::Json) {
      out << prediction_json(p).dump() << "\n";
    } else {
      out << "GP(" << p.n << "," << p.k << ") ell=" << p.ell << ": " << to_string(p.status) << " source="
          << p.source << "\n";
    }
  }
  return kExitOk;
}

inline int cmd_export(const Options& o, std::ostream& out) {
  const Graph g = gp_construct(o.n, o.k);
  if (o.output.empty()) {
    write_edge_list(out, g);
    return kExitOk;
  }
  std::ofstream file(o.output);
  if (!file) throw UsageError("cannot write " + o.output);
  write_edge_list(file, g);
  return kExitOk;
}

inline int cmd_probe(const Options& o, std::ostream& out) {
  const ConjectureProbe probe = probe_conjecture(o.k, o.n);
  const Graph g = gp_construct(o.n, o.k);
  if (o.format == Format::Json) {
    json verdicts = json::array();
    for (const auto& v : probe.verdicts) verdicts.push_back(verdict_json(v, g));
    json j{{"n", probe.n},
           {"k", probe.k},
           {"diameter", probe.diameter},
           {"conjectured_nk", probe.conjectured_nk ? json(*probe.conjectured_nk) : json(nullptr)},
           {"conjecture_applies", probe.conjecture_applies()},
           {"verdicts", verdicts},
           {"counter_signals", probe.counter_signals}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "GP(" << probe.n << "," << probe.k << ") diameter=" << probe.diameter << " n_k="
      << (probe.conjectured_nk ? std::to_string(*probe.conjectured_nk) : "n/a")
      << (probe.conjecture_applies() ? " (n > n_k)" : " (n <= n_k: no claim)") << "\n";
  for (const auto& v : probe.verdicts) detail::print_verdict(out, v, g, Format::Human);
  for (int ell : probe.counter_signals) out << "CONJECTURE SIGNAL at ell=" << ell << "\n";
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-balance verifier for generalized Petersen graphs GP(n,k)", "dbal"};
  app.set_config("--config", "", "Read flags from a key=value file (subcommand keys as scan.k=3..8)");
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto add_gp = [&](CLI::App* cmd, bool required) {
    auto* n = cmd->add_option("-n,--n", o.n, "Ring size n");
    auto* k = cmd->add_option("-k,--k", o.k, "Inner step k");
    if (required) {
      n->required();
      k->required();
    }
    return std::pair{n, k};
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format: human, json, csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  app.add_flag("-v,--verbose", o.verbosity, "Print a summary line to stderr");

  auto* check = app.add_subcommand("check", "Decide l-distance-balancedness, with witnesses");
  auto [check_n, check_k] = add_gp(check, false);
  check->add_option("-l,--ell", o.ells, "Comma-separated ell values or 'all'");
  check->add_flag("--no-symmetry", o.no_symmetry, "Check every vertex pair instead of rotation representatives");
  auto* graph_opt = check->add_option("--graph", o.graph_path, "Edge-list file instead of GP(n,k)");
  graph_opt->excludes(check_n)->excludes(check_k);
  add_format(check);

  auto* scan = app.add_subcommand("scan", "Sweep (n,k,ell) and compare BFS against predictions");
  scan->add_option("--k", o.k_range, "k range a..b")->required();
  auto* n_range = scan->add_option("--n", o.n_range, "explicit n range a..b");
  auto* n_offset = scan->add_option("--n-offset", o.n_offset, "n range relative to --n-base");
  n_range->excludes(n_offset);
  scan->add_option("--n-base", o.n_base, "Base for --n-offset: kk2 = k(k+2), nk = conjectured n_k");
  scan->add_option("-l,--l,--ell", o.ells, "Comma-separated ell values or 'all'");
  scan->add_flag("--no-symmetry", o.no_symmetry, "Check every vertex pair instead of rotation representatives");
  scan->add_option("--workers", o.workers, "Worker threads (default: hardware concurrency)")->envname("DBAL_WORKERS");
  scan->add_option("-o,--output", o.output, "Write records to a file instead of stdout");
  scan->add_option("--time-budget-ms", o.time_budget_ms, "Per-graph time budget; exceeded ells report Timeout");
  scan->add_flag("--timing", o.timing, "Record elapsed_ms (reports are no longer reproducible)");
  scan->add_flag("--no-bounds", o.no_bounds, "Skip closed-form bound reports");
  add_format(scan);

  auto* part = app.add_subcommand("partition", "Print W_xy, W_yx and tie counts for one pair");
  add_gp(part, true);
  part->add_option("x", o.x_spec, "Vertex spec like u0, v-3")->required();
  part->add_option("y", o.y_spec, "Vertex spec like u0, v-3")->required();
  part->add_flag("--sets", o.with_sets, "Also list the three vertex sets");
  add_format(part);

  auto* pred = app.add_subcommand("predict", "Closed-form prediction for ell in {1,2}");
  add_gp(pred, true);
  pred->add_option("-l,--ell", o.ells, "Comma-separated ell values");
  add_format(pred);

  auto* exp = app.add_subcommand("export", "Write GP(n,k) as an edge list");
  add_gp(exp, true);
  exp->add_option("-o,--output", o.output, "Output path (default stdout)");

  auto* probe = app.add_subcommand("probe", "Verdicts for every ell below the diameter");
  add_gp(probe, true);
  add_format(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      if (o.graph_path.empty() && (check_n->count() == 0 || check_k->count() == 0)) {
        throw UsageError("check needs -n and -k, or --graph");
      }
      return cmd_check(o, out);
    }
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (part->parsed()) return cmd_partition(o, out);
    if (pred->parsed()) return cmd_predict(o, out);
    if (exp->parsed()) return cmd_export(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dbal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dbal::cli

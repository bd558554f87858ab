// io.hpp - edge-list files and JSON / CSV serialization of results.
#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dbal/balance.hpp"
#include "dbal/gp.hpp"
#include "dbal/oracle.hpp"
#include "dbal/scan.hpp"

namespace dbal {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Edge lists
//
//   # GP(n,k) vertices=2n edges=3n
//   a b
//   ...
// Flat ids, a < b, ascending. Unlabelled graphs use "# graph vertices=V edges=E".

inline void write_edge_list(std::ostream& os, const Graph& g) {
  if (const auto& label = g.label()) {
    os << "# GP(" << label->n << "," << label->k << ")";
  } else {
    os << "# graph";
  }
  os << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << "\n";
  for (auto [a, b] : g.edges()) os << a << " " << b << "\n";
}

// The GP label is restored only when the header names GP(n,k) and the edge set
// is exactly that graph's.
inline Graph read_edge_list(std::istream& is) {
  std::vector<Edge> edges;
  std::size_t declared_vertices = 0;
  std::optional<GpParams> declared_gp;
  std::size_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      unsigned long n = 0, k = 0, v = 0;
      if (std::sscanf(line.c_str(), "# GP(%lu,%lu)", &n, &k) == 2) declared_gp = GpParams{std::uint32_t(n), std::uint32_t(k)};
      if (auto pos = line.find("vertices="); pos != std::string::npos &&
                                             std::sscanf(line.c_str() + pos, "vertices=%lu", &v) == 1) {
        declared_vertices = v;
      }
      continue;
    }
    std::istringstream fields(line);
    long long a = -1, b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'a b'");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(a, b) + 1);
  }
  const std::size_t vertex_count = declared_vertices ? declared_vertices : max_id_plus_one;
  Graph g = Graph::from_edges(vertex_count, edges);
  if (declared_gp && valid_gp_params(declared_gp->n, declared_gp->k)) {
    Graph reference = gp_construct(declared_gp->n, declared_gp->k);
    if (reference.vertex_count() == g.vertex_count() && reference.edges() == g.edges()) return reference;
  }
  return g;
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {
inline json vertex_json(const Graph* g, Vertex v) {
  if (g) return g->vertex_name(v);
  return v;
}
}  // namespace detail

inline json witness_json(const std::optional<Witness>& w, const Graph* g) {
  if (!w) return nullptr;
  return {{"x", detail::vertex_json(g, w->x)},
          {"y", detail::vertex_json(g, w->y)},
          {"closer_x", w->closer_x},
          {"closer_y", w->closer_y}};
}

inline json verdict_json(const Verdict& v, const Graph& g) {
  json out;
  if (const auto& label = g.label()) {
    out["n"] = label->n;
    out["k"] = label->k;
  } else {
    out["n"] = nullptr;
    out["k"] = nullptr;
  }
  out["ell"] = v.ell;
  out["balanced"] = v.balanced;
  out["witness"] = witness_json(v.witness, &g);
  out["pairs_checked"] = v.pairs_checked;
  return out;
}

inline json partition_json(const BalancePartition& p, const Graph& g) {
  json out{{"x", g.vertex_name(p.x)},
           {"y", g.vertex_name(p.y)},
           {"closer_x", p.closer_x},
           {"closer_y", p.closer_y},
           {"tie", p.tie},
           {"lemma_x", lemma_holds(p)},
           {"lemma_y", 2 * p.closer_y + p.tie > p.total()}};
  if (p.sets) {
    auto names = [&](const std::vector<Vertex>& vs) {
      json arr = json::array();
      for (Vertex v : vs) arr.push_back(g.vertex_name(v));
      return arr;
    };
    out["sets"] = {{"closer_x", names(p.sets->closer_x)},
                   {"closer_y", names(p.sets->closer_y)},
                   {"tie", names(p.sets->tie)}};
  }
  return out;
}

inline json prediction_json(const Prediction& p) {
  return {{"n", p.n}, {"k", p.k}, {"ell", p.ell}, {"status", to_string(p.status)}, {"source", p.source}};
}

inline json bound_json(const BoundReport& b) {
  return {{"bound", to_string(b.bound)},
          {"relation", b.equality ? "==" : ">="},
          {"predicted", to_string(b.predicted)},
          {"observed", b.observed},
          {"holds", b.holds}};
}

// Witness vertices are named against GP(n, k) without building the graph.
inline std::string gp_vertex_name(std::int64_t n, Vertex v) {
  return to_string(VertexId::from_flat(v, static_cast<std::uint32_t>(n)));
}

inline json record_json(const ScanRecord& r) {
  json witness = nullptr;
  if (r.witness) {
    witness = {{"x", gp_vertex_name(r.n, r.witness->x)},
               {"y", gp_vertex_name(r.n, r.witness->y)},
               {"closer_x", r.witness->closer_x},
               {"closer_y", r.witness->closer_y}};
  }
  json bounds = json::array();
  for (const auto& b : r.bound_reports) bounds.push_back(bound_json(b));
  json out{{"n", r.n},
           {"k", r.k},
           {"ell", r.ell},
           {"bfs_status", to_string(r.bfs_status)},
           {"witness", witness},
           {"pairs_checked", r.pairs_checked},
           {"prediction", {{"status", to_string(r.prediction.status)}, {"source", r.prediction.source}}},
           {"agreement", to_string(r.agreement)},
           {"bound_reports", bounds},
           {"conjecture_signal", r.conjecture_signal},
           {"elapsed_ms", r.elapsed.count()}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCsvHeader =
    "k,n,ell,bfs_status,predicted,agreement,witness_x,witness_y,closer_x,closer_y,elapsed_ms";

inline std::string record_csv(const ScanRecord& r) {
  std::ostringstream os;
  os << r.k << ',' << r.n << ',' << r.ell << ',' << to_string(r.bfs_status) << ','
     << to_string(r.prediction.status) << ',' << to_string(r.agreement) << ',';
  if (r.witness) {
    os << gp_vertex_name(r.n, r.witness->x) << ',' << gp_vertex_name(r.n, r.witness->y) << ','
       << r.witness->closer_x << ',' << r.witness->closer_y;
  } else {
    os << ",,,";
  }
  os << ',' << r.elapsed.count();
  return os.str();
}

// One line with the same fields as record_json.
inline std::string record_human(const ScanRecord& r) {
  std::ostringstream os;
  os << "GP(" << r.n << "," << r.k << ") ell=" << r.ell << ": " << to_string(r.bfs_status);
  if (r.witness) {
    os << " witness=(" << gp_vertex_name(r.n, r.witness->x) << "," << gp_vertex_name(r.n, r.witness->y)
       << ") closer_x=" << r.witness->closer_x << " closer_y=" << r.witness->closer_y;
  }
  os << " pairs_checked=" << r.pairs_checked << " predicted=" << to_string(r.prediction.status) << " ["
     << r.prediction.source << "] " << to_string(r.agreement);
  for (const auto& b : r.bound_reports) {
    os << " " << to_string(b.bound) << (b.holds ? ":ok" : ":FAIL") << "(" << b.observed
       << (b.equality ? "==" : ">=") << to_string(b.predicted) << ")";
  }
  if (r.conjecture_signal) os << " CONJECTURE-SIGNAL";
  if (!r.error.empty()) os << " error=\"" << r.error << "\"";
  os << " elapsed_ms=" << r.elapsed.count();
  return os.str();
}

}  // namespace dbal

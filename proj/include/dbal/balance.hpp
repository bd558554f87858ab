// balance.hpp - distance-balance partitions and l-distance-balancedness.
//
// For a pair (x, y): W_xy holds the vertices strictly closer to x, W_yx those
// strictly closer to y, and the tie set those at equal distance.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dbal/bfs.hpp"
#include "dbal/errors.hpp"
#include "dbal/gp.hpp"
#include "dbal/graph.hpp"

namespace dbal {

struct PartitionSets {
  std::vector<Vertex> closer_x;
  std::vector<Vertex> closer_y;
  std::vector<Vertex> tie;
};

struct BalancePartition {
  Vertex x = 0;
  Vertex y = 0;
  std::size_t closer_x = 0;
  std::size_t closer_y = 0;
  std::size_t tie = 0;
  std::optional<PartitionSets> sets;

  std::size_t total() const { return closer_x + closer_y + tie; }
  bool balanced() const { return closer_x == closer_y; }
  // |W_yx| - |W_xy|
  std::ptrdiff_t delta() const {
    return static_cast<std::ptrdiff_t>(closer_y) - static_cast<std::ptrdiff_t>(closer_x);
  }
};

inline BalancePartition partition_from_distances(Vertex x, Vertex y, std::span<const Distance> dx,
                                                 std::span<const Distance> dy,
                                                 bool with_sets = false) {
  BalancePartition p;
  p.x = x;
  p.y = y;
  if (with_sets) p.sets.emplace();
  for (std::size_t w = 0; w < dx.size(); ++w) {
    if (dx[w] < dy[w]) {
      ++p.closer_x;
      if (with_sets) p.sets->closer_x.push_back(static_cast<Vertex>(w));
    } else if (dy[w] < dx[w]) {
      ++p.closer_y;
      if (with_sets) p.sets->closer_y.push_back(static_cast<Vertex>(w));
    } else {
      ++p.tie;
      if (with_sets) p.sets->tie.push_back(static_cast<Vertex>(w));
    }
  }
  return p;
}

inline BalancePartition partition(const Graph& g, Vertex x, Vertex y, bool with_sets = false) {
  if (x >= g.vertex_count() || y >= g.vertex_count()) throw InvalidVertex("vertex out of range");
  if (x == y) throw IdenticalVertices();
  auto dx = bfs_distances(g, x);
  auto dy = bfs_distances(g, y);
  return partition_from_distances(x, y, dx.dist, dy.dist, with_sets);
}

inline BalancePartition partition(const Graph& g, VertexId x, VertexId y, bool with_sets = false) {
  return partition(g, g.vertex(x), g.vertex(y), with_sets);
}

inline BalancePartition partition(const RotationalDistances& rd, Vertex x, Vertex y,
                                  bool with_sets = false) {
  if (x == y) throw IdenticalVertices();
  return partition_from_distances(x, y, rd.distances_from(x), rd.distances_from(y), with_sets);
}

// 2|W_xy| + |tie| > |V| forces |W_xy| > |W_yx|.
inline bool lemma_holds(const BalancePartition& p) { return 2 * p.closer_x + p.tie > p.total(); }

inline bool lemma_imbalance(const Graph& g, Vertex x, Vertex y) {
  return lemma_holds(partition(g, x, y));
}

inline bool lemma_imbalance(const Graph& g, VertexId x, VertexId y) {
  return lemma_holds(partition(g, x, y));
}

struct Witness {
  Vertex x = 0;
  Vertex y = 0;
  std::size_t closer_x = 0;
  std::size_t closer_y = 0;
  bool operator==(const Witness&) const = default;
};

struct Verdict {
  int ell = 1;
  bool balanced = true;
  std::optional<Witness> witness;
  std::size_t pairs_checked = 0;
};

namespace detail {

inline void require_ell(int ell, Distance diam) {
  if (ell < 1 || ell > diam) {
    throw EllOutOfRange("ell=" + std::to_string(ell) + " outside [1, " + std::to_string(diam) + "]");
  }
}

// Scans pairs (x, y) with y > x and d(x, y) = ell in ascending y; records the
// first unbalanced pair. `distances_of(y, out)` fills distances from y.
template <typename DistancesOf>
bool scan_source(Vertex x, std::span<const Distance> dx, int ell, DistancesOf&& distances_of,
                 std::vector<Distance>& dy, Verdict& verdict) {
  for (Vertex y = x + 1; y < dx.size(); ++y) {
    if (dx[y] != ell) continue;
    distances_of(y, dy);
    auto p = partition_from_distances(x, y, dx, dy);
    ++verdict.pairs_checked;
    if (!p.balanced()) {
      verdict.balanced = false;
      verdict.witness = Witness{x, y, p.closer_x, p.closer_y};
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Rotation-reduced check: every unordered pair is a rotation of a pair whose
// smaller element is u_0, or of an inner pair whose smaller element is v_0.
// The witness is the lexicographically smallest unbalanced pair.
inline Verdict l_distance_verdict(const RotationalDistances& rd, int ell) {
  detail::require_ell(ell, rd.diameter());
  Verdict verdict;
  verdict.ell = ell;
  std::vector<Distance> dy;
  auto rotated = [&](Vertex y, std::vector<Distance>& out) { rd.distances_from(y, out); };
  if (detail::scan_source(0, rd.from_u0(), ell, rotated, dy, verdict)) return verdict;
  detail::scan_source(rd.n(), rd.from_v0(), ell, rotated, dy, verdict);
  return verdict;
}

inline Verdict is_l_distance_balanced(const Graph& g, int ell, bool use_symmetry) {
  if (use_symmetry) return l_distance_verdict(RotationalDistances(g), ell);

  detail::require_ell(ell, diameter(g));
  Verdict verdict;
  verdict.ell = ell;
  std::vector<Distance> dx, dy;
  std::vector<Vertex> queue;
  auto bfs_from = [&](Vertex y, std::vector<Distance>& out) { bfs_into(g, y, out, queue); };
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    bfs_into(g, x, dx, queue);
    if (detail::scan_source(x, dx, ell, bfs_from, dy, verdict)) break;
  }
  return verdict;
}

}  // namespace dbal

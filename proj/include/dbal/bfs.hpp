// bfs.hpp - unweighted single-source distances and diameter.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "dbal/errors.hpp"
#include "dbal/graph.hpp"

namespace dbal {

using Distance = std::int32_t;
inline constexpr Distance kUnreachable = -1;

struct DistanceVector {
  Vertex source = 0;
  std::vector<Distance> dist;
};

// Writes distances from `source` into `dist` (resized to vertex_count).
// `queue` is caller-owned scratch so hot loops can reuse allocations.
inline void bfs_into(const Graph& g, Vertex source, std::vector<Distance>& dist,
                     std::vector<Vertex>& queue) {
  if (source >= g.vertex_count()) throw InvalidVertex("BFS source out of range");
  dist.assign(g.vertex_count(), kUnreachable);
  queue.resize(g.vertex_count());
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex v = queue[head++];
    const Distance next = dist[v] + 1;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue[tail++] = w;
      }
    }
  }
}

inline DistanceVector bfs_distances(const Graph& g, Vertex source) {
  DistanceVector out{source, {}};
  std::vector<Vertex> queue;
  bfs_into(g, source, out.dist, queue);
  return out;
}

inline DistanceVector bfs_distances(const Graph& g, VertexId source) {
  return bfs_distances(g, g.vertex(source));
}

inline Distance eccentricity(std::span<const Distance> dist) {
  Distance ecc = 0;
  for (Distance d : dist) {
    if (d == kUnreachable) throw DisconnectedError("graph is not connected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

inline bool is_connected(const Graph& g) {
  auto d = bfs_distances(g, Vertex{0});
  return std::none_of(d.dist.begin(), d.dist.end(), [](Distance x) { return x == kUnreachable; });
}

// BFS from every vertex, or only from u_0 and v_0 when the graph carries a GP
// label (every vertex lies in the rotation orbit of one of the two).
inline Distance diameter(const Graph& g) {
  std::vector<Distance> dist;
  std::vector<Vertex> queue;
  Distance diam = 0;
  auto visit = [&](Vertex s) {
    bfs_into(g, s, dist, queue);
    diam = std::max(diam, eccentricity(dist));
  };
  if (const auto& label = g.label()) {
    visit(0);
    visit(label->n);
  } else {
    for (Vertex s = 0; s < g.vertex_count(); ++s) visit(s);
  }
  return diam;
}

}  // namespace dbal

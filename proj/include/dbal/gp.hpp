// gp.hpp - generalized Petersen graphs GP(n, k) and their rotation symmetry.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dbal/bfs.hpp"
#include "dbal/errors.hpp"
#include "dbal/graph.hpp"
#include "dbal/vertex.hpp"

namespace dbal {

inline bool valid_gp_params(std::int64_t n, std::int64_t k) {
  return n >= 3 && k >= 1 && 2 * k < n;
}

inline void require_gp_params(std::int64_t n, std::int64_t k) {
  if (!valid_gp_params(n, k)) {
    throw DomainError("GP(" + std::to_string(n) + "," + std::to_string(k) +
                      ") needs n >= 3 and 1 <= k < n/2");
  }
}

// Outer cycle u_i u_{i+1}, inner rim v_i v_{i+k}, spokes u_i v_i.
inline Graph gp_construct(std::int64_t n, std::int64_t k) {
  require_gp_params(n, k);
  const auto nn = static_cast<std::uint32_t>(n);
  const auto kk = static_cast<std::uint32_t>(k);
  std::vector<Edge> edges;
  edges.reserve(3 * nn);
  for (std::uint32_t i = 0; i < nn; ++i) {
    edges.emplace_back(i, (i + 1) % nn);
    edges.emplace_back(nn + i, nn + (i + kk) % nn);
    edges.emplace_back(i, nn + i);
  }
  Graph g = Graph::from_edges(2 * nn, edges, GpParams{nn, kk});
  if (!is_connected(g)) throw DisconnectedError("GP graph unexpectedly disconnected");
  return g;
}

// Image of v under i -> i + shift on both rims.
inline Vertex rotate(Vertex v, std::int64_t shift, std::uint32_t n) {
  auto id = VertexId::from_flat(v, n);
  id.index = wrap_index(static_cast<std::int64_t>(id.index) + shift, n);
  return id.flat(n);
}

// Image of v under i -> -i on both rims.
inline Vertex reflect(Vertex v, std::uint32_t n) {
  auto id = VertexId::from_flat(v, n);
  id.index = wrap_index(-static_cast<std::int64_t>(id.index), n);
  return id.flat(n);
}

// Distances from u_0 and v_0. Any other source is a rotation of one of them,
// so two BFS runs give every distance vector of the graph.
class RotationalDistances {
 public:
  explicit RotationalDistances(const Graph& g) : graph_(&g) {
    if (!g.label()) throw DomainError("rotation symmetry needs a GP-labelled graph");
    n_ = g.label()->n;
    std::vector<Vertex> queue;
    bfs_into(g, 0, from_outer_, queue);
    bfs_into(g, n_, from_inner_, queue);
    diameter_ = std::max(eccentricity(from_outer_), eccentricity(from_inner_));
  }

  const Graph& graph() const { return *graph_; }
  std::uint32_t n() const { return n_; }
  Distance diameter() const { return diameter_; }
  std::span<const Distance> from_u0() const { return from_outer_; }
  std::span<const Distance> from_v0() const { return from_inner_; }

  // d(source, w) = d(base, w - j) where source = base + j.
  void distances_from(Vertex source, std::vector<Distance>& out) const {
    const auto id = VertexId::from_flat(source, n_);
    const auto& base = id.kind == VertexKind::Outer ? from_outer_ : from_inner_;
    const std::uint32_t cut = (n_ - id.index) % n_;
    out.resize(2 * n_);
    std::rotate_copy(base.begin(), base.begin() + cut, base.begin() + n_, out.begin());
    std::rotate_copy(base.begin() + n_, base.begin() + n_ + cut, base.end(), out.begin() + n_);
  }

  std::vector<Distance> distances_from(Vertex source) const {
    std::vector<Distance> out;
    distances_from(source, out);
    return out;
  }

 private:
  const Graph* graph_;
  std::uint32_t n_ = 0;
  std::vector<Distance> from_outer_;
  std::vector<Distance> from_inner_;
  Distance diameter_ = 0;
};

}  // namespace dbal

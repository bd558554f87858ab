// graph.hpp - immutable undirected graph in compressed adjacency form.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dbal/errors.hpp"
#include "dbal/vertex.hpp"

namespace dbal {

// Family descriptor carried by graphs built as GP(n, k).
struct GpParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  bool operator==(const GpParams&) const = default;
};

using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;

  // Builds from an undirected edge list. Self-loops, duplicate edges and
  // out-of-range endpoints are rejected.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::optional<GpParams> label = std::nullopt) {
    if (vertex_count == 0) throw DomainError("graph needs at least one vertex");
    std::vector<std::uint32_t> degree(vertex_count, 0);
    for (auto [a, b] : edges) {
      if (a >= vertex_count || b >= vertex_count) {
        throw InvalidVertex("edge " + std::to_string(a) + " " + std::to_string(b) +
                            " references a vertex outside [0, " + std::to_string(vertex_count) + ")");
      }
      if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
      ++degree[a];
      ++degree[b];
    }

    Graph g;
    g.label_ = label;
    g.offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adjacency_.resize(g.offsets_.back());
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [a, b] : edges) {
      g.adjacency_[fill[a]++] = b;
      g.adjacency_[fill[b]++] = a;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
      auto first = g.adjacency_.begin() + g.offsets_[v];
      auto last = g.adjacency_.begin() + g.offsets_[v + 1];
      std::sort(first, last);
      if (std::adjacent_find(first, last) != last) {
        throw DomainError("duplicate edge at vertex " + std::to_string(v));
      }
    }
    return g;
  }

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex a, Vertex b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  const std::optional<GpParams>& label() const { return label_; }

  // Edges with a < b, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex a = 0; a < vertex_count(); ++a) {
      for (Vertex b : neighbors(a)) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  // Resolves a typed id against the GP label.
  Vertex vertex(VertexId id) const {
    if (!label_) throw DomainError("typed vertex ids need a GP-labelled graph");
    if (id.index >= label_->n) throw InvalidVertex("vertex index out of range");
    return id.flat(label_->n);
  }

  std::string vertex_name(Vertex v) const {
    if (label_) return to_string(VertexId::from_flat(v, label_->n));
    return std::to_string(v);
  }

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::optional<GpParams> label_;
};

}  // namespace dbal

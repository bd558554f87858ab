// vertex.hpp - typed vertex ids for generalized Petersen graphs.
//
// Outer vertex u_i is stored at flat id i, inner vertex v_i at flat id n + i.
#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "dbal/errors.hpp"

namespace dbal {

using Vertex = std::uint32_t;

enum class VertexKind : std::uint8_t { Outer, Inner };

inline std::uint32_t wrap_index(std::int64_t index, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((index % m) + m) % m);
}

struct VertexId {
  VertexKind kind = VertexKind::Outer;
  std::uint32_t index = 0;

  static VertexId outer(std::int64_t i, std::uint32_t n) {
    return {VertexKind::Outer, wrap_index(i, n)};
  }
  static VertexId inner(std::int64_t i, std::uint32_t n) {
    return {VertexKind::Inner, wrap_index(i, n)};
  }
  static VertexId from_flat(Vertex id, std::uint32_t n) {
    if (id >= 2 * n) throw InvalidVertex("flat id " + std::to_string(id) + " out of range");
    return id < n ? VertexId{VertexKind::Outer, id} : VertexId{VertexKind::Inner, id - n};
  }

  Vertex flat(std::uint32_t n) const {
    return kind == VertexKind::Outer ? index : n + index;
  }

  auto operator<=>(const VertexId&) const = default;
};

inline std::string to_string(VertexId v) {
  return (v.kind == VertexKind::Outer ? "u" : "v") + std::to_string(v.index);
}

// Grammar: [uv]-?digits. Negative indices are reduced modulo n, so "v-6" with
// n = 58 names v52.
inline VertexId parse_vertex(std::string_view spec, std::uint32_t n) {
  auto fail = [&] { return ParseError("malformed vertex spec '" + std::string(spec) + "'"); };
  if (spec.size() < 2 || (spec[0] != 'u' && spec[0] != 'v')) throw fail();
  std::string_view digits = spec.substr(1);
  bool negative = false;
  if (digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw fail();
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0) throw fail();
  if (negative) value = -value;
  return spec[0] == 'u' ? VertexId::outer(value, n) : VertexId::inner(value, n);
}

}  // namespace dbal

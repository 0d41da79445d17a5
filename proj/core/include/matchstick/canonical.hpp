#pragma once

#include <compare>
#include <string>

#include "matchstick/embedded_graph.hpp"

namespace matchstick {

/// Canonical byte string of an embedded graph up to relabelling, choice of
/// starting neighbour in each rotation, and global reflection. When the graph
/// has a designated outer face the key also fixes that face.
///
/// The key is the lexicographically smallest breadth-first code over all
/// admissible start darts and both orientations. A code lists, for vertices in
/// BFS order, their neighbours' BFS numbers in rotation order starting from the
/// dart the vertex was discovered through, each list closed by 0.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

/// Throws `Error` for graphs with more than 254 vertices.
CanonicalKey canonical_key(const EmbeddedGraph& g);

/// The relabelled (and possibly mirrored) graph whose BFS code is the key.
/// Vertex 0 is the BFS root and, when an outer face is set, the dart from 0 to
/// its first listed neighbour lies on the outer face.
EmbeddedGraph canonical_form(const EmbeddedGraph& g);

}  // namespace matchstick

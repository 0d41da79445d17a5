#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "matchstick/embedded_graph.hpp"

namespace matchstick {

/// Girth of an acyclic graph.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Integer face statistics of an embedded graph with a designated outer face.
struct FaceProfile {
  std::map<int, int> a;  ///< face length -> number of faces (outer face included)
  int f_total = 0;
  int k = 0;    ///< outer face walk length
  int tau = 0;  ///< sum over outer vertices of (r - degree)
  int girth = kInfiniteGirth;
  int r = 3;
  int n = 0;
  int edges = 0;

  int count(int length) const {
    auto it = a.find(length);
    return it == a.end() ? 0 : it->second;
  }
};

/// Computes the profile. Throws `Error` if no outer face is designated.
FaceProfile face_profile(const EmbeddedGraph& g, int r = 3);

/// Shortest cycle length of the underlying abstract graph.
int girth(const EmbeddedGraph& g);

/// n = 2|F| - 4 + tau together with sum_i (6 - i) A_i = 12 - 2 tau (r = 3).
bool euler_identity_check(const FaceProfile& p, int n);

/// The general-r face identity sum_i (2i - r i + 2r) A_i = 4r - 2 tau.
bool face_sum_identity(const FaceProfile& p);

enum class ConnectivityLevel { one_connected = 1, two_connected = 2, three_connected = 3 };

std::string_view to_string(ConnectivityLevel level);

struct ConnectivityClass {
  ConnectivityLevel level = ConnectivityLevel::three_connected;
  /// A bridge (level 1) or 2-edge-cut (level 2); empty at level 3.
  std::vector<Edge> cut_witness;
};

/// Edge connectivity capped at 3. Among several minimum cuts the witness is
/// the most balanced one (largest smaller side), ties broken lexicographically.
/// Throws `Error` for vertices of degree above 3.
ConnectivityClass connectivity_class(const EmbeddedGraph& g);

/// Every minimum edge cut of size 1 or 2 (empty when 3-edge-connected).
std::vector<std::vector<Edge>> minimum_edge_cuts(const EmbeddedGraph& g);

/// Vertex sets of the components left after deleting `removed` edges.
std::vector<std::vector<VertexId>> components_without(const EmbeddedGraph& g,
                                                      const std::vector<Edge>& removed);

/// True when every vertex off the outer face has degree exactly r.
bool inner_vertices_regular(const EmbeddedGraph& g, int r = 3);

}  // namespace matchstick

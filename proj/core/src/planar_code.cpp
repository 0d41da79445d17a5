#include "matchstick/planar_code.hpp"

#include "matchstick/error.hpp"

namespace matchstick {

std::vector<EmbeddedGraph> read_planar_code(std::string_view bytes, OuterFaceRule rule) {
  if (bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader)
    throw Error("planar_code header missing");
  std::vector<EmbeddedGraph> out;
  std::size_t pos = kPlanarCodeHeader.size();
  auto next = [&]() -> int {
    if (pos >= bytes.size()) throw Error("planar_code record truncated");
    return static_cast<unsigned char>(bytes[pos++]);
  };
  while (pos < bytes.size()) {
    const int n = next();
    if (n == 0) throw Error("planar_code: two-byte (n > 255) records are not supported");
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) {
      for (int w = next(); w != 0; w = next()) {
        if (w > n)
          throw Error("planar_code: neighbour " + std::to_string(w) + " out of range for n=" +
                      std::to_string(n));
        rot[v].push_back(w - 1);
      }
    }
    std::optional<DirectedEdge> hint;
    if (rule == OuterFaceRule::first_dart && !rot[0].empty()) hint = DirectedEdge{0, rot[0][0]};
    out.push_back(EmbeddedGraph::build(std::move(rot), hint));
  }
  return out;
}

std::string planar_code_record(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  if (n > 255) throw Error("planar_code writer supports at most 255 vertices");
  std::string out;
  out.push_back(static_cast<char>(n));
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.rotation(v)) out.push_back(static_cast<char>(w + 1));
    out.push_back(0);
  }
  return out;
}

std::string write_planar_code(std::span<const EmbeddedGraph> graphs) {
  std::string out(kPlanarCodeHeader);
  for (const auto& g : graphs) out += planar_code_record(g);
  return out;
}

}  // namespace matchstick

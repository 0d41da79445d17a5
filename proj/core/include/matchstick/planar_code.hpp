#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchstick/embedded_graph.hpp"

namespace matchstick {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// How the reader designates outer faces (planar_code itself carries none).
enum class OuterFaceRule {
  none,        ///< leave the outer face unset
  first_dart,  ///< outer face = face left of the dart from vertex 0 to its first neighbour
};

/// Decodes a planar_code stream: header, then per graph one byte n followed by
/// n zero-terminated, 1-based, clockwise neighbour lists. Only the one-byte
/// variant (n <= 255) is supported. Throws `Error` on header mismatch,
/// truncation or out-of-range neighbours.
std::vector<EmbeddedGraph> read_planar_code(std::string_view bytes,
                                            OuterFaceRule rule = OuterFaceRule::none);

/// Encodes graphs as written by the reader, header included.
std::string write_planar_code(std::span<const EmbeddedGraph> graphs);

/// Encodes one record (no header); for streaming writers.
std::string planar_code_record(const EmbeddedGraph& g);

}  // namespace matchstick

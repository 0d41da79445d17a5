#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchstick/embedded_graph.hpp"

namespace matchstick {

/// A named embedded graph with a reference drawing. Vertex ids are 0-based;
/// `labels[v]` holds the name used in the literature drawing.
struct Fixture {
  std::string name;
  std::string description;
  std::vector<std::string> labels;
  std::vector<std::pair<double, double>> drawing;
  std::vector<Edge> edges;
  EmbeddedGraph graph;
};

/// Names of the built-in fixtures: CUBE, FIG1_G3, FIG1_G4, FIG5_G1, FIG5_G2, FIG9.
std::vector<std::string> fixture_names();

/// Throws `Error` for an unknown name.
Fixture fixture(std::string_view name);

}  // namespace matchstick

#pragma once

#include <string>

#include "supersat/graph.hpp"

namespace supersat {

enum class GraphFormat { edge_list, graph6 };

// Edge-list text: "n m\n" then m lines "u v" with u < v in lexicographic
// order, LF endings.  graph6: standard header-free 6-bit encoding.
Graph read_graph(const std::string& bytes, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

// Accepts either format, deciding from the first line.
Graph read_graph_any(const std::string& bytes);

}  // namespace supersat

#pragma once

#include "turanforge/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace turanforge {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: a header line "n m" followed by m lines "u v", 0-based.
// Writing emits u < v in lexicographic edge order, one trailing newline.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// graph6 (McKay's format): one line, optional ">>graph6<<" header on read.
std::string to_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

/// Reads either format; graph6 is chosen for a ".g6" extension or a
/// ">>graph6<<" header, edge-list otherwise.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g, bool graph6 = false);

}  // namespace turanforge

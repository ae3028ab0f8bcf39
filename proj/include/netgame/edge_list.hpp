#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "netgame/graph.hpp"

namespace netgame {

class EdgeListError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes one `u v` line per edge (u < v, sorted). A leading `#` comment
/// records node and edge counts; isolated nodes are not representable.
void write_edge_list(std::ostream& os, const Graph& g);

/// Parses whitespace-separated decimal id pairs, skipping blank lines and
/// lines starting with `#`. Duplicate lines and self-loops are rejected.
Graph read_edge_list(std::istream& is);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace netgame

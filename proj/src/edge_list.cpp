#include "netgame/edge_list.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace netgame {

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u.value << ' ' << e.v.value << '\n';
}

Graph read_edge_list(std::istream& is) {
  Graph g;
  std::set<Edge> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw EdgeListError("line " + std::to_string(line_no) + ": expected two node ids");
    }
    if (a == b) throw EdgeListError("line " + std::to_string(line_no) + ": self-loop");
    const Edge e = Edge::make(NodeId{a}, NodeId{b});
    if (!seen.insert(e).second) {
      throw EdgeListError("line " + std::to_string(line_no) + ": duplicate edge");
    }
    for (NodeId v : {e.u, e.v}) {
      if (!g.contains(v)) g.insert_node(v);
    }
    g.add_edge(e.u, e.v);
  }
  if (is.bad()) throw EdgeListError("read failure");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EdgeListError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw EdgeListError("cannot open " + path + " for writing");
  write_edge_list(out, g);
  out.flush();
  if (!out) throw EdgeListError("write failure on " + path);
}

}  // namespace netgame

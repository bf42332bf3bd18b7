#ifndef HCMINOR_GRAPH_HPP
#define HCMINOR_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hcminor {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n_vertices-1. Edges are stored with
// first < second, in input order.
struct Graph {
  int n_vertices = 0;
  std::vector<Edge> edges;

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;
  int max_degree() const;
};

// Normalizes edge orientation and rejects loops, duplicates and negative ids.
Graph make_graph(int n_vertices, std::vector<Edge> edges);

// Guest graphs for embedding: simple, at least one edge, no isolated vertex.
void validate_guest(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' starts a comment. The vertex
// count is one more than the largest id seen.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Named graphs used by tests and examples.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph cycle_graph(int n);
Graph petersen_graph();

}  // namespace hcminor

#endif  // HCMINOR_GRAPH_HPP

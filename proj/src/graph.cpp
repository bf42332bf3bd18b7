#include "hcminor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hcminor/errors.hpp"

namespace hcminor {

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_vertices));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_vertices), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

int Graph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Graph make_graph(int n_vertices, std::vector<Edge> edges) {
  if (n_vertices < 0) throw ValidationError("negative vertex count");
  std::set<Edge> seen;
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n_vertices || e.second >= n_vertices)
      throw ValidationError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                            ") references a vertex outside [0, " + std::to_string(n_vertices) + ")");
    if (e.first == e.second) throw ValidationError("loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!seen.insert(e).second)
      throw ValidationError("duplicate edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
  }
  return Graph{n_vertices, std::move(edges)};
}

void validate_guest(const Graph& g) {
  if (g.edges.empty()) throw ValidationError("guest graph has no edges");
  const auto deg = g.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] == 0) throw ValidationError("guest graph has isolated vertex " + std::to_string(v));
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    std::string rest;
    if (!(fields >> v) || (fields >> rest))
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly two vertex ids");
    if (u < 0 || v < 0 || u > 1'000'000'000 || v > 1'000'000'000)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
  }
  return make_graph(max_id + 1, std::move(edges));
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return make_graph(leaves + 1, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return make_graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return make_graph(10, std::move(edges));
}

}  // namespace hcminor

#ifndef HCMINOR_EMBED_HPP
#define HCMINOR_EMBED_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hcminor/cube.hpp"
#include "hcminor/graph.hpp"
#include "hcminor/grid_perm.hpp"
#include "hcminor/model.hpp"

namespace hcminor {

// Coordinate layout inside Q_d (all 1-based):
//   grid       1 .. a
//   temporal   a+1 .. a+temporal_width
//   spare A    (d-1, d),  spare B  (d-3, d-2)
// Every other coordinate stays 0.
struct EmbedParams {
  int d = 0;
  int a = 0;
  int cycle_length = 0;
  int temporal_width = 0;

  int minimal_d() const { return a + temporal_width + 4; }
  std::pair<int, int> spare_a() const { return {d - 1, d}; }
  std::pair<int, int> spare_b() const { return {d - 3, d - 2}; }
  // Spare pair used for a detour at routing step i.
  std::pair<int, int> spare_for_step(int i) const { return i % 2 == 1 ? spare_a() : spare_b(); }
};

// a = max(2, ceil(log2(2m))), L = 2a, k_t = ceil(log2 L). Without a requested
// dimension the minimal feasible d = a + k_t + 4 is used.
EmbedParams feasible_params(std::size_t edge_count, std::optional<int> d = std::nullopt);

// Branch paths P(v) carved as consecutive arcs of the Gray cycle of Q_a.
struct PortAssignment {
  int a = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<CubeVertex>> arcs;
  // (v, x) -> v_x, the vertex of P(v) reserved for neighbour x.
  std::map<Edge, CubeVertex> ports;

  const CubeVertex& port(int v, int x) const { return ports.at({v, x}); }
};

PortAssignment assign_ports(const Graph& g, const EmbedParams& params);

// Involution of Q_a (as the binary grid (2,...,2)) swapping x_y and y_x for
// every edge and fixing all non-port vertices.
GridPerm target_involution(const PortAssignment& ports, const EmbedParams& params);

MinorModel route_paths(const GridPerm& sigma, const PortAssignment& ports, const EmbedParams& params);

MinorModel embed(const Graph& g, std::optional<int> d = std::nullopt);

// Q_a vertices and binary grid ranks differ only in bit order: grid
// coordinate i is cube coordinate i, and rank puts the last coordinate in
// the lowest position.
std::size_t cube_to_grid_rank(const CubeVertex& v);
CubeVertex grid_rank_to_cube(std::size_t rank, int a);

}  // namespace hcminor

#endif  // HCMINOR_EMBED_HPP

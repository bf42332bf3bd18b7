#include "hcminor/embed.hpp"

#include <algorithm>

#include "hcminor/errors.hpp"

namespace hcminor {

namespace {

int ceil_log2(std::size_t x) {
  int k = 0;
  while ((std::size_t{1} << k) < x) ++k;
  return k;
}

struct Token {
  Edge edge;
  std::size_t position;  // grid rank
  std::size_t destination;
  bool reversed;  // started at the second endpoint's port
  std::vector<CubeVertex> path;
};

}  // namespace

std::size_t cube_to_grid_rank(const CubeVertex& v) {
  std::size_t rank = 0;
  for (int i = 1; i <= v.width(); ++i) rank = rank * 2 + static_cast<std::size_t>(v.coord(i));
  return rank;
}

CubeVertex grid_rank_to_cube(std::size_t rank, int a) {
  std::uint64_t bits = 0;
  for (int i = a; i >= 1; --i) {
    bits |= static_cast<std::uint64_t>(rank & 1u) << (i - 1);
    rank >>= 1;
  }
  return CubeVertex(a, bits);
}

EmbedParams feasible_params(std::size_t edge_count, std::optional<int> d) {
  if (edge_count == 0) throw ParameterError("feasible_params: guest needs at least one edge");
  EmbedParams p;
  p.a = std::max(2, ceil_log2(2 * edge_count));
  if (p.a > 30) throw SizeError("feasible_params: guest too large");
  p.cycle_length = 2 * p.a;
  p.temporal_width = ceil_log2(static_cast<std::size_t>(p.cycle_length));
  const int minimal = p.minimal_d();
  if (d && *d < minimal) throw InfeasibleError(*d, minimal);
  p.d = d.value_or(minimal);
  if (p.d > kMaxCubeWidth) throw DimensionError("host dimension above 63 is not supported");
  return p;
}

PortAssignment assign_ports(const Graph& g, const EmbedParams& params) {
  validate_guest(g);
  if (2 * g.edges.size() > (std::size_t{1} << params.a))
    throw ParameterError("assign_ports: 2m exceeds 2^a");
  const auto cycle = gray_cycle(params.a);
  const auto adj = g.adjacency();

  PortAssignment out{params.a, g.edges, {}, {}};
  out.arcs.resize(static_cast<std::size_t>(g.n_vertices));
  std::size_t next = 0;
  for (int v = 0; v < g.n_vertices; ++v) {
    for (int x : adj[static_cast<std::size_t>(v)]) {
      const auto& port = cycle.order[next++];
      out.arcs[static_cast<std::size_t>(v)].push_back(port);
      out.ports.emplace(Edge{v, x}, port);
    }
  }
  return out;
}

GridPerm target_involution(const PortAssignment& ports, const EmbedParams& params) {
  GridShape shape(std::vector<std::size_t>(static_cast<std::size_t>(params.a), 2));
  std::vector<std::size_t> image(shape.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  for (const auto& [u, v] : ports.edges) {
    const auto ru = cube_to_grid_rank(ports.port(u, v));
    const auto rv = cube_to_grid_rank(ports.port(v, u));
    image[ru] = rv;
    image[rv] = ru;
  }
  return GridPerm(std::move(shape), std::move(image));
}

MinorModel route_paths(const GridPerm& sigma, const PortAssignment& ports, const EmbedParams& params) {
  const int a = params.a;
  const int steps = params.cycle_length - 1;
  if (params.d < params.minimal_d()) throw InfeasibleError(params.d, params.minimal_d());

  const auto factors = decompose(sigma);
  ensure(static_cast<int>(factors.size()) == steps, "route_paths: factor count differs from L-1");
  const auto temporal = even_cycle_embedding(params.cycle_length, params.temporal_width);

  const std::size_t grid_size = sigma.shape().size();
  std::vector<std::uint64_t> cube_bits(grid_size);
  for (std::size_t r = 0; r < grid_size; ++r) cube_bits[r] = grid_rank_to_cube(r, a).bits();

  const auto host = [&](std::size_t rank, int label, std::uint64_t spare_mask) {
    return CubeVertex(params.d, cube_bits[rank] |
                                    (temporal.label_to_vertex[static_cast<std::size_t>(label)].bits() << a) |
                                    spare_mask);
  };
  const auto coord_bit = [](int c) { return std::uint64_t{1} << (c - 1); };

  // One token per guest edge, starting from the port with the smaller
  // integer form.
  std::vector<Token> tokens;
  tokens.reserve(ports.edges.size());
  for (const auto& [u, v] : ports.edges) {
    const auto& pu = ports.port(u, v);
    const auto& pv = ports.port(v, u);
    const bool reversed = pv.bits() < pu.bits();
    const auto& start = reversed ? pv : pu;
    const auto& stop = reversed ? pu : pv;
    Token t{{u, v}, cube_to_grid_rank(start), cube_to_grid_rank(stop), reversed, {}};
    ensure(sigma(t.position) == t.destination, "route_paths: sigma does not swap the ports of an edge");
    t.path.push_back(host(t.position, 0, 0));
    tokens.push_back(std::move(t));
  }

  std::vector<int> occupant(grid_size, -1);
  std::vector<std::size_t> current(tokens.size());
  std::vector<std::size_t> next(tokens.size());
  std::vector<int> partner(tokens.size());
  for (int i = 1; i <= steps; ++i) {
    const auto& factor = factors[static_cast<std::size_t>(i - 1)];
    std::fill(occupant.begin(), occupant.end(), -1);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      ensure(occupant[tokens[t].position] < 0, "route_paths: two tokens share a grid position");
      occupant[tokens[t].position] = static_cast<int>(t);
      current[t] = tokens[t].position;
      next[t] = factor(current[t]);
    }
    // Lines have length 2, so a token moving onto an occupied point swaps
    // with that occupant.
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      partner[t] = -1;
      if (next[t] == tokens[t].position) continue;
      const int o = occupant[next[t]];
      if (o < 0) continue;
      ensure(next[static_cast<std::size_t>(o)] == tokens[t].position, "route_paths: one-sided collision");
      partner[t] = o;
    }

    const auto [s1, s2] = params.spare_for_step(i);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      auto& tok = tokens[t];
      const std::size_t from = current[t];
      const std::size_t to = next[t];
      if (partner[t] < 0) {
        tok.path.push_back(host(from, i, 0));
        if (to != from) tok.path.push_back(host(to, i, 0));
      } else {
        const auto other = current[static_cast<std::size_t>(partner[t])];
        const std::uint64_t mask = coord_bit(cube_bits[from] < cube_bits[other] ? s1 : s2);
        tok.path.push_back(host(from, i - 1, mask));
        tok.path.push_back(host(from, i, mask));
        tok.path.push_back(host(to, i, mask));
        tok.path.push_back(host(to, i, 0));
      }
      tok.position = to;
    }
  }

  MinorModel model;
  model.d = params.d;
  for (std::size_t v = 0; v < ports.arcs.size(); ++v) {
    auto& set = model.branch_sets[static_cast<int>(v)];
    for (const auto& x : ports.arcs[v]) set.push_back(host(cube_to_grid_rank(x), 0, 0));
  }
  for (auto& tok : tokens) {
    ensure(tok.position == tok.destination, "route_paths: token did not reach its destination port");
    tok.path.push_back(host(tok.position, 0, 0));
    if (tok.reversed) std::reverse(tok.path.begin(), tok.path.end());
    model.paths.push_back({tok.edge, std::move(tok.path)});
  }
  return model;
}

MinorModel embed(const Graph& g, std::optional<int> d) {
  validate_guest(g);
  const auto params = feasible_params(g.edges.size(), d);
  const auto ports = assign_ports(g, params);
  const auto sigma = target_involution(ports, params);
  return route_paths(sigma, ports, params);
}

}  // namespace hcminor

#include "hcminor/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace hcminor {

namespace {

std::string vertex_label(int v) { return "vertex " + std::to_string(v); }

std::string edge_label(const Edge& e) {
  return "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

bool adjacent(const CubeVertex& u, const CubeVertex& v) {
  return u.width() == v.width() && is_cube_edge(u, v);
}

}  // namespace

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::BadVertexWidth: return "BadVertexWidth";
    case ViolationCode::BranchDisconnected: return "BranchDisconnected";
    case ViolationCode::BranchOverlap: return "BranchOverlap";
    case ViolationCode::PathNotPath: return "PathNotPath";
    case ViolationCode::PathEndpointWrong: return "PathEndpointWrong";
    case ViolationCode::PathInternalHitsBranch: return "PathInternalHitsBranch";
    case ViolationCode::PathsIntersect: return "PathsIntersect";
    case ViolationCode::EdgeMissing: return "EdgeMissing";
  }
  return "Unknown";
}

bool VerifyReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

VerifyReport verify(const Graph& g, const MinorModel& model) {
  std::vector<Violation> out;
  const auto add = [&](ViolationCode code, std::string detail) { out.push_back({code, std::move(detail)}); };

  for (const auto& [v, set] : model.branch_sets)
    for (const auto& x : set)
      if (x.width() != model.d)
        add(ViolationCode::BadVertexWidth, "branch set of " + vertex_label(v) + " has '" + x.text() + "'");
  for (const auto& p : model.paths)
    for (const auto& x : p.vertices)
      if (x.width() != model.d)
        add(ViolationCode::BadVertexWidth, "path for " + edge_label(p.edge) + " has '" + x.text() + "'");

  // owners[x] lists the guest vertices whose branch set contains x.
  std::unordered_map<CubeVertex, std::vector<int>> owners;
  for (int v = 0; v < g.n_vertices; ++v) {
    const auto it = model.branch_sets.find(v);
    if (it == model.branch_sets.end() || it->second.empty()) {
      add(ViolationCode::BranchDisconnected, "branch set of " + vertex_label(v) + " is empty");
      continue;
    }
    const auto& set = it->second;
    std::set<CubeVertex> members(set.begin(), set.end());
    if (members.size() != set.size())
      add(ViolationCode::BranchOverlap, "branch set of " + vertex_label(v) + " repeats a vertex");
    for (const auto& x : members) owners[x].push_back(v);

    std::set<CubeVertex> reached{*members.begin()};
    std::vector<CubeVertex> stack{*members.begin()};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& y : members)
        if (!reached.count(y) && adjacent(x, y)) {
          reached.insert(y);
          stack.push_back(y);
        }
    }
    if (reached.size() != members.size())
      add(ViolationCode::BranchDisconnected, "branch set of " + vertex_label(v) + " is not connected");
  }
  for (const auto& [x, who] : owners)
    if (who.size() > 1)
      add(ViolationCode::BranchOverlap, "'" + x.text() + "' lies in the branch sets of " + vertex_label(who[0]) +
                                            " and " + vertex_label(who[1]));

  std::map<Edge, int> path_count;
  for (const auto& e : g.edges) path_count[e] = 0;
  for (const auto& p : model.paths) {
    const Edge e{std::min(p.edge.first, p.edge.second), std::max(p.edge.first, p.edge.second)};
    const auto it = path_count.find(e);
    if (it == path_count.end())
      add(ViolationCode::EdgeMissing, edge_label(p.edge) + " has a path but is not a guest edge");
    else
      ++it->second;
  }
  for (const auto& [e, count] : path_count) {
    if (count == 0) add(ViolationCode::EdgeMissing, edge_label(e) + " has no path");
    if (count > 1) add(ViolationCode::EdgeMissing, edge_label(e) + " has " + std::to_string(count) + " paths");
  }

  const auto owned_by = [&](const CubeVertex& x, int v) {
    const auto it = owners.find(x);
    return it != owners.end() && std::find(it->second.begin(), it->second.end(), v) != it->second.end();
  };

  std::unordered_map<CubeVertex, std::size_t> path_of;
  std::set<std::pair<std::size_t, std::size_t>> intersecting;
  for (std::size_t k = 0; k < model.paths.size(); ++k) {
    const auto& p = model.paths[k];
    const auto& verts = p.vertices;
    const std::string name = "path for " + edge_label(p.edge);
    if (verts.size() < 2) {
      add(ViolationCode::PathNotPath, name + " has fewer than two vertices");
    } else {
      for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (!adjacent(verts[i], verts[i + 1])) {
          add(ViolationCode::PathNotPath, name + " steps from '" + verts[i].text() + "' to non-neighbour '" +
                                              verts[i + 1].text() + "'");
        }
      if (std::set<CubeVertex>(verts.begin(), verts.end()).size() != verts.size())
        add(ViolationCode::PathNotPath, name + " repeats a vertex");

      const auto [u, v] = p.edge;
      const bool forward = owned_by(verts.front(), u) && owned_by(verts.back(), v);
      const bool backward = owned_by(verts.front(), v) && owned_by(verts.back(), u);
      if (!forward && !backward) add(ViolationCode::PathEndpointWrong, name + " does not join the two branch sets");
      for (std::size_t i = 1; i + 1 < verts.size(); ++i)
        if (owners.count(verts[i]))
          add(ViolationCode::PathInternalHitsBranch, name + " passes through branch vertex '" + verts[i].text() + "'");
    }
    for (const auto& x : std::set<CubeVertex>(verts.begin(), verts.end())) {
      const auto [it, inserted] = path_of.emplace(x, k);
      if (!inserted && intersecting.emplace(it->second, k).second)
        add(ViolationCode::PathsIntersect, "paths for " + edge_label(model.paths[it->second].edge) + " and " +
                                               edge_label(p.edge) + " share '" + x.text() + "'");
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VerifyReport{out.empty(), std::move(out)};
}

}  // namespace hcminor

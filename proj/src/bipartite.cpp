#include "hcminor/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "hcminor/errors.hpp"

namespace hcminor {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Hopcroft-Karp over the edges still marked alive. match_left[u] is the edge
// index matched at u, or kNone.
class HopcroftKarp {
 public:
  HopcroftKarp(const RegularBipartiteMultigraph& g, const std::vector<char>& alive)
      : g_(g), adj_(g.left_size), match_left_(g.left_size, kNone), match_right_(g.right_size, kNone),
        dist_(g.left_size) {
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (alive[e]) adj_[g.edges[e].left].push_back(e);
  }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t u = 0; u < g_.left_size; ++u)
        if (match_left_[u] == kNone && dfs(u)) ++size;
    return size;
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < g_.left_size; ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kNone;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (auto e : adj_[u]) {
        const std::size_t m = match_right_[g_.edges[e].right];
        if (m == kNone) {
          found = true;
        } else {
          const std::size_t w = g_.edges[m].left;
          if (dist_[w] == kNone) {
            dist_[w] = dist_[u] + 1;
            q.push(w);
          }
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (auto e : adj_[u]) {
      const std::size_t v = g_.edges[e].right;
      const std::size_t m = match_right_[v];
      if (m == kNone || (dist_[g_.edges[m].left] == dist_[u] + 1 && dfs(g_.edges[m].left))) {
        match_left_[u] = e;
        match_right_[v] = e;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  const RegularBipartiteMultigraph& g_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

void validate(const RegularBipartiteMultigraph& g) {
  if (g.left_size == 0 || g.left_size != g.right_size)
    throw ValidationError("bipartite sides must be equal and nonempty");
  if (g.edges.size() != g.left_size * g.degree) throw ValidationError("edge count is not side * degree");
  std::vector<std::size_t> left(g.left_size, 0);
  std::vector<std::size_t> right(g.right_size, 0);
  std::vector<std::size_t> tags;
  tags.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (e.left >= g.left_size || e.right >= g.right_size) throw ValidationError("edge endpoint out of range");
    ++left[e.left];
    ++right[e.right];
    tags.push_back(e.tag);
  }
  for (std::size_t v = 0; v < g.left_size; ++v)
    if (left[v] != g.degree || right[v] != g.degree)
      throw ValidationError("multigraph is not " + std::to_string(g.degree) + "-regular at vertex " +
                            std::to_string(v));
  std::sort(tags.begin(), tags.end());
  if (std::adjacent_find(tags.begin(), tags.end()) != tags.end()) throw ValidationError("edge tags are not distinct");
}

RegularBipartiteMultigraph make_regular_bipartite(std::size_t side, std::vector<BipartiteEdge> edges) {
  if (side == 0) throw ValidationError("bipartite sides must be nonempty");
  RegularBipartiteMultigraph g{side, side, edges.size() / side, std::move(edges)};
  validate(g);
  return g;
}

std::vector<Matching> split_into_matchings(const RegularBipartiteMultigraph& g) {
  validate(g);
  std::vector<char> alive(g.edges.size(), 1);
  std::vector<Matching> out;
  out.reserve(g.degree);
  for (std::size_t round = 0; round < g.degree; ++round) {
    HopcroftKarp hk(g, alive);
    ensure(hk.run() == g.left_size, "split_into_matchings: regular remainder had no perfect matching");
    Matching m;
    m.reserve(g.left_size);
    for (auto e : hk.match_left()) {
      alive[e] = 0;
      m.push_back(g.edges[e]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hcminor

#ifndef HCMINOR_BIPARTITE_HPP
#define HCMINOR_BIPARTITE_HPP

#include <cstddef>
#include <vector>

namespace hcminor {

struct BipartiteEdge {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t tag = 0;

  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

struct RegularBipartiteMultigraph {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::size_t degree = 0;
  std::vector<BipartiteEdge> edges;
};

// Builds the multigraph on side x side vertices and infers the degree.
// Throws ValidationError unless it is regular with distinct tags.
RegularBipartiteMultigraph make_regular_bipartite(std::size_t side, std::vector<BipartiteEdge> edges);
void validate(const RegularBipartiteMultigraph& g);

// A perfect matching, indexed by left vertex.
using Matching = std::vector<BipartiteEdge>;

// Peels off `degree` perfect matchings one at a time with Hopcroft-Karp on
// the remaining edges. Regularity of each remainder guarantees Hall's
// condition, so every round finds a perfect matching.
std::vector<Matching> split_into_matchings(const RegularBipartiteMultigraph& g);

}  // namespace hcminor

#endif  // HCMINOR_BIPARTITE_HPP

#ifndef HCMINOR_EXPANDER_HPP
#define HCMINOR_EXPANDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "hcminor/cube.hpp"
#include "hcminor/graph.hpp"

namespace hcminor {

using Ratio = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline const Ratio kDefaultBeta{9, 50};
inline constexpr int kMaxExpansionVertices = 28;

std::string to_string(const Ratio& r);
std::string to_string(const BigRational& r);
Ratio parse_ratio(const std::string& text);

struct CubicGraph {
  Graph graph;
};

CubicGraph make_cubic(Graph g);

// Configuration model with rejection of loops and multi-edges, at most 1000
// resamples. Deterministic in the seed.
CubicGraph gen_cubic(int two_n, std::uint64_t seed);

struct ExpansionReport {
  bool passes = false;
  Ratio beta = kDefaultBeta;
  std::vector<int> worst_set;
  Ratio worst_ratio;
};

// Exhaustive minimum of |N(S)|/|S| over nonempty S with |S| <= n.
ExpansionReport check_expansion(const CubicGraph& g, const Ratio& beta = kDefaultBeta);

// placement[v] is the host vertex s_v.
using Placement = std::vector<CubeVertex>;

struct BoundReport {
  std::uint64_t hamming_sum = 0;
  std::int64_t lower_bound = 0;
  std::vector<std::uint64_t> cut_sizes;
  std::vector<std::uint64_t> side_sizes;
  std::uint64_t host_capacity = 0;
};

BoundReport bound_report(const Graph& g, const Placement& placement, int d);

struct NonMinorCertificate {
  bool certified = false;
  std::int64_t min_lower_bound = 0;
  std::uint64_t host_capacity = 0;
};

// One-sided: certified means no placement leaves room for a subdivision in
// Q_d. A false result is inconclusive.
NonMinorCertificate subcubic_nonminor_certificate(const Graph& g, int d);

// Number of length-d binary strings with at most floor(d/4) ones.
BigInt weight_tail(int d);

struct TheoremReport {
  int d = 0;
  BigRational lhs;
  BigRational rhs;
  bool holds = false;
  BigInt tail;
  bool tail_holds = false;
};

// lhs = (0.18*45/8) 2^d - (50/(2d)) 2^d against rhs = 2^d, plus the tail
// condition weight_tail(d) < (45 * 2^d / d) / 2.
TheoremReport theorem_inequality(int d);

// Smallest d in [1, max_d] where the inequality holds, if any.
std::optional<int> minimal_theorem_dimension(int max_d);
// Smallest d in [1, max_d] with weight_tail(d) < 2^d / d, if any.
std::optional<int> minimal_tail_dimension(int max_d);

Placement parse_placement(std::istream& in, const Graph& g, int d);

}  // namespace hcminor

#endif  // HCMINOR_EXPANDER_HPP

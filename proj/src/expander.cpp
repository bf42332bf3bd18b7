#include "hcminor/expander.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "hcminor/errors.hpp"

namespace hcminor {

std::string to_string(const Ratio& r) { return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()); }

std::string to_string(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Ratio parse_ratio(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    const long long p = std::stoll(num, &used);
    if (used != num.size()) throw ParseError("");
    const long long q = std::stoll(den, &used);
    if (used != den.size() || q <= 0) throw ParseError("");
    return Ratio(p, q);
  } catch (const std::exception&) {
    throw ParseError("bad ratio '" + text + "', expected p/q");
  }
}

CubicGraph make_cubic(Graph g) {
  for (auto deg : g.degrees())
    if (deg != 3) throw ValidationError("graph is not 3-regular");
  return CubicGraph{std::move(g)};
}

CubicGraph gen_cubic(int two_n, std::uint64_t seed) {
  if (two_n < 4 || two_n % 2 != 0) throw ParameterError("gen_cubic: need an even vertex count >= 4");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  for (int v = 0; v < two_n; ++v) stubs.insert(stubs.end(), 3, v);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng() % i]);
    std::set<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && edges.emplace(u, v).second;
    }
    if (simple) return make_cubic(make_graph(two_n, {edges.begin(), edges.end()}));
  }
  throw RetryExhaustedError("gen_cubic: no simple pairing after 1000 resamples");
}

ExpansionReport check_expansion(const CubicGraph& g, const Ratio& beta) {
  const int n = g.graph.n_vertices;
  if (n > kMaxExpansionVertices)
    throw SizeError("check_expansion: " + std::to_string(n) + " vertices exceeds brute-force limit 28");
  if (n == 0) throw ValidationError("check_expansion: empty graph");

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.graph.edges) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }

  // N(S) = (nb_low[S & low] | nb_high[S >> split]) & ~S, with the
  // neighbourhood unions of each half tabulated once.
  const int split = std::min(n, 14);
  const auto tabulate = [&](int offset, int count) {
    std::vector<std::uint32_t> t(std::size_t{1} << count, 0);
    for (std::size_t mask = 1; mask < t.size(); ++mask) {
      const int low = std::countr_zero(mask);
      t[mask] = t[mask & (mask - 1)] | adj[static_cast<std::size_t>(offset + low)];
    }
    return t;
  };
  const auto nb_low = tabulate(0, split);
  const auto nb_high = tabulate(split, n - split);

  const int limit = n / 2;
  std::int64_t best_num = 1;
  std::int64_t best_den = 0;  // sentinel for "no set yet"
  std::uint32_t best_set = 0;
  for (std::uint32_t hi = 0; hi < nb_high.size(); ++hi) {
    const int hi_count = std::popcount(hi);
    if (hi_count > limit) continue;
    for (std::uint32_t lo = 0; lo < nb_low.size(); ++lo) {
      const int size = hi_count + std::popcount(lo);
      if (size == 0 || size > limit) continue;
      const std::uint32_t s = (hi << split) | lo;
      const std::int64_t boundary = std::popcount((nb_low[lo] | nb_high[hi]) & ~s);
      if (best_den == 0 || boundary * best_den < best_num * size) {
        best_num = boundary;
        best_den = size;
        best_set = s;
      }
    }
  }
  ensure(best_den > 0, "check_expansion: no candidate set");

  ExpansionReport report;
  report.beta = beta;
  report.worst_ratio = Ratio(best_num, best_den);
  for (int v = 0; v < n; ++v)
    if ((best_set >> v) & 1u) report.worst_set.push_back(v);
  report.passes = report.worst_ratio >= beta;
  return report;
}

BoundReport bound_report(const Graph& g, const Placement& placement, int d) {
  if (d < 1 || d > kMaxCubeWidth) throw DimensionError("bound_report: d outside [1, 63]");
  if (placement.size() != static_cast<std::size_t>(g.n_vertices))
    throw ValidationError("placement does not cover every guest vertex");
  if (g.n_vertices % 2 != 0) throw ValidationError("bound_report: guest vertex count must be even");
  std::set<CubeVertex> used;
  for (const auto& s : placement) {
    if (s.width() != d) throw ValidationError("placement vertex '" + s.text() + "' has the wrong width");
    if (!used.insert(s).second) throw ValidationError("placement is not injective at '" + s.text() + "'");
  }

  BoundReport r;
  r.cut_sizes.assign(static_cast<std::size_t>(d), 0);
  r.side_sizes.assign(static_cast<std::size_t>(d), 0);
  r.host_capacity = std::uint64_t{1} << d;
  for (const auto& [u, v] : g.edges) {
    const auto& su = placement[static_cast<std::size_t>(u)];
    const auto& sv = placement[static_cast<std::size_t>(v)];
    r.hamming_sum += static_cast<std::uint64_t>(hamming(su, sv));
    for (int i = 1; i <= d; ++i)
      if (su.coord(i) != sv.coord(i)) ++r.cut_sizes[static_cast<std::size_t>(i - 1)];
  }
  for (int i = 1; i <= d; ++i) {
    std::uint64_t ones = 0;
    for (const auto& s : placement) ones += static_cast<std::uint64_t>(s.coord(i));
    r.side_sizes[static_cast<std::size_t>(i - 1)] = std::min(ones, placement.size() - ones);
  }
  std::uint64_t cut_total = 0;
  for (auto c : r.cut_sizes) cut_total += c;
  ensure(cut_total == r.hamming_sum, "bound_report: coordinate cuts do not sum to the Hamming total");
  r.lower_bound = static_cast<std::int64_t>(r.hamming_sum) - g.n_vertices / 2;
  return r;
}

NonMinorCertificate subcubic_nonminor_certificate(const Graph& g, int d) {
  if (g.max_degree() > 3) throw ParameterError("certificate needs maximum degree at most 3");
  if (g.n_vertices % 2 != 0) throw ParameterError("certificate needs an even vertex count");
  if (g.n_vertices > 6 || d > 4) throw SizeError("certificate brute force is limited to 6 vertices and d <= 4");
  if (d < 1) throw DimensionError("certificate needs d >= 1");

  const std::uint32_t hosts = 1u << d;
  NonMinorCertificate cert;
  cert.host_capacity = hosts;
  cert.min_lower_bound = std::numeric_limits<std::int64_t>::max();

  const auto n = static_cast<std::size_t>(g.n_vertices);
  std::vector<std::uint32_t> place(n);
  std::uint32_t taken = 0;
  // Depth-first over injective placements.
  const auto search = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      std::int64_t sum = 0;
      for (const auto& [a, b] : g.edges)
        sum += std::popcount(place[static_cast<std::size_t>(a)] ^ place[static_cast<std::size_t>(b)]);
      cert.min_lower_bound = std::min(cert.min_lower_bound, sum - static_cast<std::int64_t>(n / 2));
      return;
    }
    for (std::uint32_t h = 0; h < hosts; ++h) {
      if ((taken >> h) & 1u) continue;
      taken |= 1u << h;
      place[v] = h;
      self(self, v + 1);
      taken &= ~(1u << h);
    }
  };
  search(search, 0);
  cert.certified = cert.min_lower_bound > static_cast<std::int64_t>(hosts);
  return cert;
}

BigInt weight_tail(int d) {
  if (d < 1) throw ParameterError("weight_tail: d must be positive");
  BigInt sum = 0;
  BigInt term = 1;
  for (int w = 0; w <= d / 4; ++w) {
    sum += term;
    term = term * (d - w) / (w + 1);
  }
  return sum;
}

namespace {

// 0.18 * 45 / 8 = 81/80 and 50 / (2d) = 25/d, so lhs = (81d - 2000) 2^d / (80d).
BigRational theorem_lhs(int d, const BigInt& power) {
  return BigRational(BigInt(81LL * d - 2000) * power, BigInt(80LL * d));
}

}  // namespace

TheoremReport theorem_inequality(int d) {
  if (d < 1) throw ParameterError("theorem_inequality: d must be positive");
  const BigInt power = BigInt(1) << d;
  TheoremReport r;
  r.d = d;
  r.lhs = theorem_lhs(d, power);
  r.rhs = BigRational(power);
  r.holds = r.lhs > r.rhs;
  r.tail = weight_tail(d);
  r.tail_holds = r.tail * 2 * d < 45 * power;
  return r;
}

std::optional<int> minimal_theorem_dimension(int max_d) {
  for (int d = 1; d <= max_d; ++d) {
    const BigInt power = BigInt(1) << d;
    if (theorem_lhs(d, power) > BigRational(power)) return d;
  }
  return std::nullopt;
}

std::optional<int> minimal_tail_dimension(int max_d) {
  for (int d = 1; d <= max_d; ++d)
    if (weight_tail(d) * d < (BigInt(1) << d)) return d;
  return std::nullopt;
}

Placement parse_placement(std::istream& in, const Graph& g, int d) {
  Placement placement(static_cast<std::size_t>(g.n_vertices));
  std::vector<char> seen(placement.size(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long v = 0;
    std::string text;
    if (!(fields >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("placement line " + std::to_string(line_no) + ": expected 'vertex-id vertex-string'");
    }
    std::string rest;
    if (!(fields >> text) || (fields >> rest))
      throw ParseError("placement line " + std::to_string(line_no) + ": expected 'vertex-id vertex-string'");
    if (v < 0 || v >= g.n_vertices) throw ParseError("placement line " + std::to_string(line_no) + ": unknown vertex");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("placement lists vertex " + std::to_string(v) + " twice");
    seen[static_cast<std::size_t>(v)] = 1;
    const auto s = CubeVertex::parse(text);
    if (s.width() != d) throw ParseError("placement vertex '" + text + "' does not have width " + std::to_string(d));
    placement[static_cast<std::size_t>(v)] = s;
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw ParseError("placement is missing vertex " + std::to_string(v));
  return placement;
}

}  // namespace hcminor

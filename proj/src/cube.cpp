#include "hcminor/cube.hpp"

#include <bit>

#include "hcminor/errors.hpp"

namespace hcminor {

CubeVertex::CubeVertex(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 0 || width > kMaxCubeWidth)
    throw DimensionError("cube width " + std::to_string(width) + " outside [0, 63]");
  if (width < 64 && (bits >> width) != 0)
    throw DimensionError("integer form " + std::to_string(bits) + " does not fit width " +
                         std::to_string(width));
}

CubeVertex CubeVertex::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxCubeWidth))
    throw DimensionError("cube vertex text longer than 63 characters");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw ParseError("cube vertex '" + std::string(text) + "' contains a character other than 0/1");
  }
  return CubeVertex(static_cast<int>(text.size()), bits);
}

int CubeVertex::coord(int i) const {
  if (i < 1 || i > width_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
  return static_cast<int>((bits_ >> (i - 1)) & 1u);
}

CubeVertex CubeVertex::flipped(int i) const {
  if (i < 1 || i > width_) throw DimensionError("coordinate " + std::to_string(i) + " out of range");
  return CubeVertex(width_, bits_ ^ (std::uint64_t{1} << (i - 1)));
}

std::string CubeVertex::text() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i)
    if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

int hamming(const CubeVertex& u, const CubeVertex& v) {
  if (u.width() != v.width())
    throw DimensionError("hamming: width " + std::to_string(u.width()) + " vs " +
                         std::to_string(v.width()));
  return std::popcount(u.bits() ^ v.bits());
}

bool is_cube_edge(const CubeVertex& u, const CubeVertex& v) { return hamming(u, v) == 1; }

GrayCycle gray_cycle(int k) {
  if (k < 1) throw ParameterError("gray_cycle: k must be at least 1");
  if (k > 30) throw ParameterError("gray_cycle: k > 30 is not supported");
  GrayCycle cycle{k, {}};
  const std::uint64_t n = std::uint64_t{1} << k;
  cycle.order.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) cycle.order.emplace_back(k, i ^ (i >> 1));
  return cycle;
}

CycleEmbedding even_cycle_embedding(int length, int k) {
  if (k < 1 || k > 30) throw ParameterError("even_cycle_embedding: k outside [1, 30]");
  if (length % 2 != 0 || length < 4 || static_cast<std::uint64_t>(length) > (std::uint64_t{1} << k))
    throw ParameterError("even_cycle_embedding: need even L with 4 <= L <= 2^k, got L=" +
                         std::to_string(length) + ", k=" + std::to_string(k));
  const auto half = gray_cycle(k - 1);
  const std::uint64_t top = std::uint64_t{1} << (k - 1);
  const auto h = static_cast<std::size_t>(length / 2);

  CycleEmbedding emb{length, k, {}};
  emb.label_to_vertex.reserve(static_cast<std::size_t>(length));
  for (std::size_t i = 0; i < h; ++i) emb.label_to_vertex.emplace_back(k, half.order[i].bits());
  for (std::size_t i = h; i-- > 0;) emb.label_to_vertex.emplace_back(k, half.order[i].bits() | top);
  return emb;
}

}  // namespace hcminor

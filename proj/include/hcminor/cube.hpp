#ifndef HCMINOR_CUBE_HPP
#define HCMINOR_CUBE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hcminor {

inline constexpr int kMaxCubeWidth = 63;

// A vertex of Q_d. Coordinate i (1-based) is bit i-1 of the integer form and
// character i of the textual form, so coordinate 1 is printed leftmost.
class CubeVertex {
 public:
  CubeVertex() = default;
  CubeVertex(int width, std::uint64_t bits);

  static CubeVertex parse(std::string_view text);

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  int coord(int i) const;
  CubeVertex flipped(int i) const;

  std::string text() const;

  friend auto operator<=>(const CubeVertex&, const CubeVertex&) = default;

 private:
  int width_ = 0;
  std::uint64_t bits_ = 0;
};

int hamming(const CubeVertex& u, const CubeVertex& v);
bool is_cube_edge(const CubeVertex& u, const CubeVertex& v);

// Reflected Gray code: a Hamiltonian cycle of Q_k (a 2-cycle when k = 1).
struct GrayCycle {
  int k = 0;
  std::vector<CubeVertex> order;
};

GrayCycle gray_cycle(int k);

// An even cycle C_L placed in Q_k: label l sits at label_to_vertex[l].
struct CycleEmbedding {
  int length = 0;
  int k = 0;
  std::vector<CubeVertex> label_to_vertex;
};

// Mirrored Gray prefix: g_0..g_{L/2-1} of Q_{k-1}, then the same prefix
// reversed with coordinate k set.
CycleEmbedding even_cycle_embedding(int length, int k);

}  // namespace hcminor

template <>
struct std::hash<hcminor::CubeVertex> {
  std::size_t operator()(const hcminor::CubeVertex& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.bits() * 131u + static_cast<unsigned>(v.width()));
  }
};

#endif  // HCMINOR_CUBE_HPP

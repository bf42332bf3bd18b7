#ifndef HCMINOR_GRID_PERM_HPP
#define HCMINOR_GRID_PERM_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hcminor {

// Mixed-radix grid [n_1] x ... x [n_d]. Points are ranked row-major with the
// last coordinate varying fastest. Coordinates are 1-based.
class GridShape {
 public:
  GridShape() = default;
  explicit GridShape(std::vector<std::size_t> dims);

  int dimension() const { return static_cast<int>(dims_.size()); }
  std::size_t extent(int j) const;
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return size_; }

  // Product of extents after coordinate j.
  std::size_t stride(int j) const;
  // Number of lines along direction j, i.e. size() / extent(j).
  std::size_t line_count(int j) const { return size_ / extent(j); }

  std::size_t line_of(std::size_t rank, int j) const;
  std::size_t position_of(std::size_t rank, int j) const;
  std::size_t rank_at(std::size_t line, std::size_t position, int j) const;

  friend bool operator==(const GridShape&, const GridShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 0;
};

struct GridPoint {
  std::vector<std::size_t> coords;
  std::size_t rank = 0;
};

GridPoint make_point(const GridShape& shape, std::span<const std::size_t> coords);
GridPoint point_at(const GridShape& shape, std::size_t rank);

// Permutation of a grid: image[rank(x)] = rank(sigma(x)).
class GridPerm {
 public:
  GridPerm(GridShape shape, std::vector<std::size_t> image);

  static GridPerm identity(const GridShape& shape);

  const GridShape& shape() const { return shape_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t operator()(std::size_t rank) const { return image_[rank]; }

 private:
  GridShape shape_;
  std::vector<std::size_t> image_;
};

// Permutation that moves points only along coordinate `direction`. One
// permutation of {0..n_j-1} per line; lines are numbered row-major over the
// fixed coordinates.
class OneDimPerm {
 public:
  OneDimPerm(GridShape shape, int direction, std::vector<std::vector<std::size_t>> line_perms);

  static OneDimPerm identity(const GridShape& shape, int direction);

  const GridShape& shape() const { return shape_; }
  int direction() const { return direction_; }
  const std::vector<std::vector<std::size_t>>& line_perms() const { return line_perms_; }

  std::size_t operator()(std::size_t rank) const;

 private:
  GridShape shape_;
  int direction_;
  std::vector<std::vector<std::size_t>> line_perms_;
};

GridPoint apply(const GridPerm& p, const GridPoint& x);
GridPoint apply(const OneDimPerm& p, const GridPoint& x);

// Writes sigma as sigma_{2d-1} o ... o sigma_1 with sigma_i one-dimensional in
// direction |d - i| + 1. Always returns exactly 2d - 1 factors.
std::vector<OneDimPerm> decompose(const GridPerm& sigma);

// True iff applying the factors in order (first factor first) reproduces
// sigma on every point.
bool compose_equals(std::span<const OneDimPerm> factors, const GridPerm& sigma);

// Permutation file: line k holds the rank of sigma(point k); '#' comments.
GridPerm parse_permutation(std::istream& in, const GridShape& shape);
GridShape parse_shape(const std::string& text);
void write_factors(std::ostream& out, std::span<const OneDimPerm> factors);

}  // namespace hcminor

#endif  // HCMINOR_GRID_PERM_HPP

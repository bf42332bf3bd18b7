#include "hcminor/grid_perm.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hcminor/bipartite.hpp"
#include "hcminor/errors.hpp"

namespace hcminor {

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& values) {
  std::vector<char> seen(values.size(), 0);
  for (auto v : values) {
    if (v >= values.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct RawFactor {
  int direction;
  std::vector<std::vector<std::size_t>> lines;
};

// Recursion of the grid decomposition on raw rank tables. Coordinate d is
// the vertical axis: first sort every column into layers, route each layer
// recursively in the remaining d-1 coordinates, then sort columns again.
std::vector<RawFactor> decompose_raw(const std::vector<std::size_t>& dims,
                                     const std::vector<std::size_t>& image) {
  const int d = static_cast<int>(dims.size());
  if (d == 1) return {RawFactor{1, {image}}};

  const std::size_t height = dims.back();
  const std::size_t columns = image.size() / height;
  const std::vector<std::size_t> layer_dims(dims.begin(), dims.end() - 1);

  std::vector<BipartiteEdge> edges;
  edges.reserve(image.size());
  for (std::size_t x = 0; x < image.size(); ++x) edges.push_back({x / height, image[x] / height, x});
  const auto matchings = split_into_matchings(make_regular_bipartite(columns, std::move(edges)));
  ensure(matchings.size() == height, "decompose: wrong number of matchings");

  std::vector<std::size_t> layer(image.size());
  for (std::size_t l = 0; l < height; ++l)
    for (const auto& e : matchings[l]) layer[e.tag] = l;

  RawFactor first{d, std::vector<std::vector<std::size_t>>(columns, std::vector<std::size_t>(height))};
  RawFactor last{d, std::vector<std::vector<std::size_t>>(columns, std::vector<std::size_t>(height))};
  std::vector<std::vector<std::size_t>> tau(height, std::vector<std::size_t>(columns));
  for (std::size_t x = 0; x < image.size(); ++x) {
    const std::size_t target = image[x];
    first.lines[x / height][x % height] = layer[x];
    tau[layer[x]][x / height] = target / height;
    last.lines[target / height][layer[x]] = target % height;
  }

  std::vector<std::vector<RawFactor>> layer_factors;
  layer_factors.reserve(height);
  for (const auto& t : tau) layer_factors.push_back(decompose_raw(layer_dims, t));

  std::vector<RawFactor> out;
  out.reserve(static_cast<std::size_t>(2 * d - 1));
  out.push_back(std::move(first));
  const std::size_t inner = layer_factors.front().size();
  for (std::size_t k = 0; k < inner; ++k) {
    const int dir = layer_factors.front()[k].direction;
    const std::size_t sub_lines = layer_factors.front()[k].lines.size();
    RawFactor f{dir, std::vector<std::vector<std::size_t>>(sub_lines * height)};
    // Coordinate d is the fastest of the fixed coordinates, so line indices
    // interleave the layers.
    for (std::size_t l = 0; l < height; ++l)
      for (std::size_t s = 0; s < sub_lines; ++s) f.lines[s * height + l] = std::move(layer_factors[l][k].lines[s]);
    out.push_back(std::move(f));
  }
  out.push_back(std::move(last));
  return out;
}

}  // namespace

GridShape::GridShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ValidationError("grid shape needs at least one coordinate");
  size_ = 1;
  for (auto n : dims_) {
    if (n == 0) throw ValidationError("grid extents must be positive");
    if (size_ > std::numeric_limits<std::size_t>::max() / n) throw ValidationError("grid size overflows");
    size_ *= n;
  }
}

std::size_t GridShape::extent(int j) const {
  if (j < 1 || j > dimension()) throw ValidationError("direction " + std::to_string(j) + " out of range");
  return dims_[static_cast<std::size_t>(j - 1)];
}

std::size_t GridShape::stride(int j) const {
  std::size_t s = 1;
  for (int i = dimension(); i > j; --i) s *= dims_[static_cast<std::size_t>(i - 1)];
  return s;
}

std::size_t GridShape::line_of(std::size_t rank, int j) const {
  const std::size_t s = stride(j);
  return rank / (s * extent(j)) * s + rank % s;
}

std::size_t GridShape::position_of(std::size_t rank, int j) const { return rank / stride(j) % extent(j); }

std::size_t GridShape::rank_at(std::size_t line, std::size_t position, int j) const {
  const std::size_t s = stride(j);
  return (line / s * extent(j) + position) * s + line % s;
}

GridPoint make_point(const GridShape& shape, std::span<const std::size_t> coords) {
  if (coords.size() != shape.dims().size()) throw ValidationError("point has wrong number of coordinates");
  std::size_t rank = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 1 || coords[i] > shape.dims()[i])
      throw ValidationError("coordinate " + std::to_string(i + 1) + " out of range");
    rank = rank * shape.dims()[i] + (coords[i] - 1);
  }
  return GridPoint{{coords.begin(), coords.end()}, rank};
}

GridPoint point_at(const GridShape& shape, std::size_t rank) {
  if (rank >= shape.size()) throw ValidationError("rank " + std::to_string(rank) + " out of range");
  GridPoint p{std::vector<std::size_t>(shape.dims().size()), rank};
  for (std::size_t i = shape.dims().size(); i-- > 0;) {
    p.coords[i] = rank % shape.dims()[i] + 1;
    rank /= shape.dims()[i];
  }
  return p;
}

GridPerm::GridPerm(GridShape shape, std::vector<std::size_t> image)
    : shape_(std::move(shape)), image_(std::move(image)) {
  if (image_.size() != shape_.size())
    throw ValidationError("permutation has " + std::to_string(image_.size()) + " entries, grid has " +
                          std::to_string(shape_.size()) + " points");
  if (!is_permutation_of_range(image_)) throw ValidationError("image is not a permutation of the grid ranks");
}

GridPerm GridPerm::identity(const GridShape& shape) {
  std::vector<std::size_t> image(shape.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return GridPerm(shape, std::move(image));
}

OneDimPerm::OneDimPerm(GridShape shape, int direction, std::vector<std::vector<std::size_t>> line_perms)
    : shape_(std::move(shape)), direction_(direction), line_perms_(std::move(line_perms)) {
  const std::size_t n = shape_.extent(direction_);
  if (line_perms_.size() != shape_.line_count(direction_))
    throw ValidationError("one-dimensional permutation has the wrong number of lines");
  for (const auto& line : line_perms_)
    if (line.size() != n || !is_permutation_of_range(line))
      throw ValidationError("line permutation is not a bijection of the line");
}

OneDimPerm OneDimPerm::identity(const GridShape& shape, int direction) {
  std::vector<std::size_t> line(shape.extent(direction));
  for (std::size_t i = 0; i < line.size(); ++i) line[i] = i;
  return OneDimPerm(shape, direction,
                    std::vector<std::vector<std::size_t>>(shape.line_count(direction), line));
}

std::size_t OneDimPerm::operator()(std::size_t rank) const {
  const std::size_t line = shape_.line_of(rank, direction_);
  return shape_.rank_at(line, line_perms_[line][shape_.position_of(rank, direction_)], direction_);
}

GridPoint apply(const GridPerm& p, const GridPoint& x) {
  const auto checked = make_point(p.shape(), x.coords);
  return point_at(p.shape(), p(checked.rank));
}

GridPoint apply(const OneDimPerm& p, const GridPoint& x) {
  const auto checked = make_point(p.shape(), x.coords);
  return point_at(p.shape(), p(checked.rank));
}

std::vector<OneDimPerm> decompose(const GridPerm& sigma) {
  auto raw = decompose_raw(sigma.shape().dims(), sigma.image());
  std::vector<OneDimPerm> factors;
  factors.reserve(raw.size());
  for (auto& f : raw) factors.emplace_back(sigma.shape(), f.direction, std::move(f.lines));
  return factors;
}

bool compose_equals(std::span<const OneDimPerm> factors, const GridPerm& sigma) {
  for (const auto& f : factors)
    if (!(f.shape() == sigma.shape())) throw ValidationError("factor shape differs from permutation shape");
  for (std::size_t x = 0; x < sigma.shape().size(); ++x) {
    std::size_t y = x;
    for (const auto& f : factors) y = f(y);
    if (y != sigma(x)) return false;
  }
  return true;
}

GridShape parse_shape(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad shape '" + text + "'");
    }
    if (used != item.size() || item.empty() || item[0] == '-') throw ParseError("bad shape '" + text + "'");
    dims.push_back(static_cast<std::size_t>(n));
  }
  return GridShape(std::move(dims));
}

GridPerm parse_permutation(std::istream& in, const GridShape& shape) {
  std::vector<std::size_t> image;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long v = 0;
    if (!(fields >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("line " + std::to_string(line_no) + ": expected a rank");
    }
    std::string rest;
    if (v < 0 || (fields >> rest)) throw ParseError("line " + std::to_string(line_no) + ": expected one rank");
    image.push_back(static_cast<std::size_t>(v));
  }
  return GridPerm(shape, std::move(image));
}

void write_factors(std::ostream& out, std::span<const OneDimPerm> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out << "factor " << i + 1 << " direction " << factors[i].direction() << '\n';
    for (const auto& line : factors[i].line_perms()) {
      for (std::size_t k = 0; k < line.size(); ++k) out << (k ? " " : "") << line[k] + 1;
      out << '\n';
    }
  }
}

}  // namespace hcminor

#ifndef HCMINOR_MODEL_HPP
#define HCMINOR_MODEL_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hcminor/cube.hpp"
#include "hcminor/graph.hpp"

namespace hcminor {

struct ConnectPath {
  Edge edge;
  std::vector<CubeVertex> vertices;
};

// Branch sets plus connecting paths claiming that a guest graph is a minor
// of Q_d.
struct MinorModel {
  int d = 0;
  std::map<int, std::vector<CubeVertex>> branch_sets;
  std::vector<ConnectPath> paths;
};

// {"d": int, "branch_sets": {"<id>": ["0101", ...]}, "paths": [{"edge": [u, v],
//  "vertices": [...]}]}
std::string model_to_json(const MinorModel& model);
MinorModel model_from_json(const std::string& text);
MinorModel read_model(const std::string& path);

}  // namespace hcminor

#endif  // HCMINOR_MODEL_HPP

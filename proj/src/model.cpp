#include "hcminor/model.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcminor/errors.hpp"

namespace hcminor {

std::string model_to_json(const MinorModel& model) {
  nlohmann::ordered_json j;
  j["d"] = model.d;
  auto& branches = j["branch_sets"] = nlohmann::ordered_json::object();
  for (const auto& [v, set] : model.branch_sets) {
    auto& list = branches[std::to_string(v)] = nlohmann::ordered_json::array();
    for (const auto& x : set) list.push_back(x.text());
  }
  auto& paths = j["paths"] = nlohmann::ordered_json::array();
  for (const auto& p : model.paths) {
    nlohmann::ordered_json entry;
    entry["edge"] = {p.edge.first, p.edge.second};
    auto& verts = entry["vertices"] = nlohmann::ordered_json::array();
    for (const auto& x : p.vertices) verts.push_back(x.text());
    paths.push_back(std::move(entry));
  }
  return j.dump(1) + "\n";
}

MinorModel model_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    MinorModel model;
    model.d = j.at("d").get<int>();
    for (const auto& [key, list] : j.at("branch_sets").items()) {
      std::size_t used = 0;
      const int v = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("branch set key '" + key + "' is not an integer");
      auto& set = model.branch_sets[v];
      for (const auto& s : list) set.push_back(CubeVertex::parse(s.get<std::string>()));
    }
    for (const auto& entry : j.at("paths")) {
      const auto& e = entry.at("edge");
      if (!e.is_array() || e.size() != 2) throw ParseError("path edge must be a pair");
      ConnectPath p{{e[0].get<int>(), e[1].get<int>()}, {}};
      for (const auto& s : entry.at("vertices")) p.vertices.push_back(CubeVertex::parse(s.get<std::string>()));
      model.paths.push_back(std::move(p));
    }
    return model;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed model JSON: ") + ex.what());
  } catch (const std::logic_error& ex) {
    throw ParseError(std::string("malformed model JSON: ") + ex.what());
  }
}

MinorModel read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace hcminor

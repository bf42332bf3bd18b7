#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "hcminor/embed.hpp"
#include "hcminor/verify.hpp"
#include "model_oracle.hpp"
#include "test_support.hpp"

using namespace hcminor;
using hcminor::testing::mutate_many;
using hcminor::testing::oracle_valid;

namespace {

std::vector<CubeVertex> vs(std::initializer_list<const char*> texts) {
  std::vector<CubeVertex> out;
  for (const auto* t : texts) out.push_back(CubeVertex::parse(t));
  return out;
}

MinorModel k2_model() {
  MinorModel m;
  m.d = 1;
  m.branch_sets = {{0, vs({"0"})}, {1, vs({"1"})}};
  m.paths = {{{0, 1}, vs({"0", "1"})}};
  return m;
}

}  // namespace

TEST_CASE("smallest valid model") {
  const auto report = verify(complete_graph(2), k2_model());
  CHECK(report.valid);
  CHECK(report.violations.empty());
}

TEST_CASE("branch overlap") {
  auto m = k2_model();
  m.branch_sets[1] = vs({"0"});
  const auto report = verify(complete_graph(2), m);
  CHECK_FALSE(report.valid);
  CHECK(report.has(ViolationCode::BranchOverlap));
}

TEST_CASE("each violation code is reachable") {
  const auto g = complete_graph(2);
  {
    auto m = k2_model();
    m.branch_sets[0] = vs({"00"});
    CHECK(verify(g, m).has(ViolationCode::BadVertexWidth));
  }
  {
    MinorModel m;
    m.d = 2;
    m.branch_sets = {{0, vs({"00", "11"})}, {1, vs({"10"})}};
    m.paths = {{{0, 1}, vs({"00", "10"})}};
    CHECK(verify(g, m).has(ViolationCode::BranchDisconnected));
    m.branch_sets.erase(1);
    CHECK(verify(g, m).has(ViolationCode::BranchDisconnected));
  }
  {
    MinorModel m;
    m.d = 2;
    m.branch_sets = {{0, vs({"00"})}, {1, vs({"11"})}};
    m.paths = {{{0, 1}, vs({"00", "11"})}};
    CHECK(verify(g, m).has(ViolationCode::PathNotPath));
    m.paths = {{{0, 1}, vs({"00", "10", "00", "10", "11"})}};
    CHECK(verify(g, m).has(ViolationCode::PathNotPath));
    m.paths = {{{0, 1}, vs({"00"})}};
    CHECK(verify(g, m).has(ViolationCode::PathNotPath));
    m.paths = {{{0, 1}, vs({"00", "10"})}};
    CHECK(verify(g, m).has(ViolationCode::PathEndpointWrong));
  }
  {
    MinorModel m;
    m.d = 2;
    m.branch_sets = {{0, vs({"00"})}, {1, vs({"11"})}, {2, vs({"10"})}};
    m.paths = {{{0, 1}, vs({"00", "10", "11"})}, {{1, 2}, vs({"11", "10"})}};
    const auto report = verify(path_graph(3), m);
    CHECK(report.has(ViolationCode::PathInternalHitsBranch));
    CHECK(report.has(ViolationCode::PathsIntersect));
  }
  {
    auto m = k2_model();
    m.paths.clear();
    CHECK(verify(g, m).has(ViolationCode::EdgeMissing));
    m.paths = {{{0, 1}, vs({"0", "1"})}, {{1, 0}, vs({"1", "0"})}};
    const auto report = verify(g, m);
    CHECK(report.has(ViolationCode::EdgeMissing));
    CHECK(report.has(ViolationCode::PathsIntersect));
  }
}

TEST_CASE("violations are sorted by code then detail") {
  MinorModel m;
  m.d = 2;
  m.branch_sets = {{0, vs({"00"})}, {1, vs({"00", "1"})}};
  const auto report = verify(complete_graph(2), m);
  CHECK_FALSE(report.valid);
  CHECK(std::is_sorted(report.violations.begin(), report.violations.end()));
  CHECK(report.violations.front().code == ViolationCode::BadVertexWidth);
  CHECK(report.violations.back().code == ViolationCode::EdgeMissing);
}

TEST_CASE("hand-built models on Q_3") {
  MinorModel p3;
  p3.d = 3;
  p3.branch_sets = {{0, vs({"000"})}, {1, vs({"100", "110"})}, {2, vs({"111"})}};
  p3.paths = {{{0, 1}, vs({"000", "100"})}, {{1, 2}, vs({"110", "111"})}};

  MinorModel k3;
  k3.d = 3;
  k3.branch_sets = {{0, vs({"000", "100"})}, {1, vs({"110", "010"})}, {2, vs({"011", "001"})}};
  k3.paths = {{{0, 1}, vs({"100", "110"})}, {{1, 2}, vs({"010", "011"})}, {{0, 2}, vs({"000", "001"})}};

  MinorModel star;
  star.d = 3;
  star.branch_sets = {{0, vs({"000", "100", "010"})}, {1, vs({"110"})}, {2, vs({"011"})}, {3, vs({"001"})}};
  star.paths = {{{0, 1}, vs({"100", "110"})}, {{0, 2}, vs({"010", "011"})}, {{0, 3}, vs({"000", "001"})}};

  const std::vector<std::pair<Graph, MinorModel>> cases{
      {complete_graph(2), k2_model()}, {path_graph(3), p3}, {complete_graph(3), k3}, {star_graph(3), star}};
  std::uint64_t seed = 1;
  for (const auto& [g, m] : cases) {
    REQUIRE(oracle_valid(g, m));
    REQUIRE(verify(g, m).valid);
    const auto stats = mutate_many(g, m, 400, seed++);
    CHECK(stats.total >= 50);
    CHECK(stats.breaking > 0);
    CHECK(stats.false_accepts == 0);
    CHECK(stats.disagreements == 0);
  }
}

TEST_CASE("mutations of constructed models are caught") {
  std::uint64_t seed = 100;
  for (const auto& g : {complete_graph(2), path_graph(3), complete_graph(3), star_graph(3), complete_graph(4)}) {
    const auto model = embed(g);
    REQUIRE(oracle_valid(g, model));
    const auto stats = mutate_many(g, model, 200, seed++);
    CHECK(stats.total >= 50);
    CHECK(stats.false_accepts == 0);
    CHECK(stats.disagreements == 0);
  }
}

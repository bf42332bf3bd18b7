#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hcminor/cli.hpp"
#include "hcminor/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hcminor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("hcminor_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = (path / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string petersen_text() {
  std::ostringstream s;
  s << "# Petersen graph\n";
  hcminor::write_edge_list(s, hcminor::petersen_graph());
  return s.str();
}

}  // namespace

#include <unistd.h>

TEST_CASE("embed then verify Petersen at d = 13") {
  TempDir tmp;
  const auto graph = tmp.file("petersen.txt", petersen_text());
  const auto model = tmp.file("model.json");
  const auto e = run({"embed", "-i", graph, "-d", "13", "-o", model});
  CHECK(e.code == 0);
  CHECK(e.out == "a=5 L=10 k_t=4 d=13\n");
  const auto v = run({"verify", "-i", graph, "-m", model});
  CHECK(v.code == 0);
  CHECK(v.out == "valid\n");

  const auto again = tmp.file("model2.json");
  run({"embed", "-i", graph, "-o", again});
  CHECK(slurp(model) == slurp(again));

  const auto j = nlohmann::json::parse(slurp(model));
  CHECK(j["d"] == 13);
  CHECK(j["branch_sets"].size() == 10);
  CHECK(j["paths"].size() == 15);
  CHECK(j["branch_sets"]["0"][0].get<std::string>().size() == 13);
}

TEST_CASE("embed reports infeasible dimension") {
  TempDir tmp;
  const auto graph = tmp.file("petersen.txt", petersen_text());
  const auto r = run({"embed", "-i", graph, "-d", "12", "-o", tmp.file("m.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("minimal feasible d=13") != std::string::npos);
}

TEST_CASE("verify flags a corrupted model") {
  TempDir tmp;
  const auto graph = tmp.file("k2.txt", "0 1\n");
  const auto model = tmp.file("bad.json",
                              R"({"d": 1, "branch_sets": {"0": ["0"], "1": ["0"]}, "paths": [{"edge": [0, 1], "vertices": ["0", "1"]}]})");
  const auto r = run({"verify", "-i", graph, "-m", model});
  CHECK(r.code == 1);
  CHECK(r.err.find("BranchOverlap") != std::string::npos);

  const auto good = tmp.file("good.json",
                             R"({"d": 1, "branch_sets": {"0": ["0"], "1": ["1"]}, "paths": [{"edge": [0, 1], "vertices": ["0", "1"]}]})");
  CHECK(run({"verify", "-i", graph, "-m", good}).code == 0);
  CHECK(run({"verify", "-i", graph, "-m", tmp.file("junk.json", "{")}).code == 2);
}

TEST_CASE("decompose with --check") {
  TempDir tmp;
  const auto perm = tmp.file("perm.txt", "# 4-cycle\n1\n3\n0\n2\n");
  const auto factors = tmp.file("factors.txt");
  const auto r = run({"decompose", "--shape", "2,2", "-i", perm, "-o", factors, "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "compose_equals=true\n");
  const auto text = slurp(factors);
  CHECK(text.rfind("factor 1 direction 2\n", 0) == 0);
  CHECK(text.find("factor 3 direction 2\n") != std::string::npos);

  CHECK(run({"decompose", "--shape", "2,2", "-i", tmp.file("bad.txt", "0\n0\n1\n2\n")}).code == 2);
  CHECK(run({"decompose", "--shape", "2,x", "-i", perm}).code == 2);
}

TEST_CASE("expander gen and check") {
  TempDir tmp;
  const auto g = tmp.file("g.txt");
  CHECK(run({"expander", "gen", "--n2", "12", "--seed", "3", "-o", g}).code == 0);
  const auto first = slurp(g);
  run({"expander", "gen", "--n2", "12", "--seed", "3", "-o", g});
  CHECK(slurp(g) == first);

  const auto k4 = tmp.file("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const auto ok = run({"expander", "check", "-i", k4});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["passes"] == true);
  CHECK(j["beta"] == "9/50");
  CHECK(j["worst_ratio"] == "1/1");

  const auto two = tmp.file("two.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n");
  const auto bad = run({"expander", "check", "-i", two, "--plain"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("passes=false\n") != std::string::npos);
  CHECK(bad.out.find("worst_ratio=0/1\n") != std::string::npos);

  CHECK(run({"expander", "check", "-i", k4, "--beta", "3/2"}).code == 1);
  CHECK(run({"expander", "check", "-i", k4, "--beta", "x"}).code == 2);
  CHECK(run({"expander", "gen", "--n2", "7"}).code == 2);
  CHECK(run({"expander", "check", "-i", tmp.file("path.txt", "0 1\n1 2\n")}).code == 2);
}

TEST_CASE("bound subcommands") {
  TempDir tmp;
  const auto k4 = tmp.file("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const auto place = tmp.file("place.txt", "0 00\n1 10\n2 11\n3 01\n");
  const auto p = run({"bound", "place", "-i", k4, "-p", place, "--d", "2"});
  CHECK(p.code == 0);
  const auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["hamming_sum"] == 8);
  CHECK(pj["lower_bound"] == 6);
  CHECK(pj["host_capacity"] == 4);

  const auto c = run({"bound", "certify", "-i", k4, "--d", "2", "--plain"});
  CHECK(c.code == 0);
  CHECK(c.out == "certified=true\nmin_lower_bound=6\nhost_capacity=4\n");

  const auto t = run({"bound", "theorem", "--d", "2001"});
  CHECK(t.code == 0);
  const auto tj = nlohmann::json::parse(t.out);
  CHECK(tj["holds"] == true);
  CHECK(tj["tail_holds"] == true);
  CHECK(run({"bound", "theorem", "--d", "100", "--plain"}).out.find("holds=false") != std::string::npos);

  const auto tail = run({"bound", "tail", "--d", "8", "--plain"});
  CHECK(tail.out == "d=8\nweight_tail=37\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"embed"}).code == 2);
  CHECK(run({"embed", "-i", "/nonexistent/graph.txt"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

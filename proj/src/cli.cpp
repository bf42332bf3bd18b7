#include "hcminor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hcminor/embed.hpp"
#include "hcminor/errors.hpp"
#include "hcminor/expander.hpp"
#include "hcminor/grid_perm.hpp"
#include "hcminor/verify.hpp"

namespace hcminor::cli {

namespace {

using Json = nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

std::string plain_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + plain_value(v[i]);
    return s;
  }
  return v.dump();
}

void emit(std::ostream& out, const Json& report, bool plain) {
  if (!plain) {
    out << report.dump(1) << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) out << key << '=' << plain_value(value) << '\n';
}

template <typename T>
Json json_list(const std::vector<T>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v);
  return a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified minor embeddings into hypercubes and expander non-embeddability bounds", "hcminor"};
  app.require_subcommand(1);

  std::string input, output, model_path, shape_text, placement_path, beta_text = "9/50";
  int dim_value = 0;
  int bound_d = 0;
  int two_n = 0;
  std::uint64_t seed = kDefaultSeed;
  bool check = false;
  bool plain = false;

  auto* embed_cmd = app.add_subcommand("embed", "Construct a minor model of a guest graph in Q_d");
  embed_cmd->add_option("-i,--input", input, "Guest edge list")->required();
  auto* dim_opt = embed_cmd->add_option("-d,--dimension", dim_value, "Host dimension (default: minimal feasible)");
  embed_cmd->add_option("-o,--output", output, "Model JSON (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a minor model against a guest graph");
  verify_cmd->add_option("-i,--input", input, "Guest edge list")->required();
  verify_cmd->add_option("-m,--model", model_path, "Model JSON")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a grid permutation into one-dimensional factors");
  decompose_cmd->add_option("--shape", shape_text, "Grid extents n1,n2,...")->required();
  decompose_cmd->add_option("-i,--input", input, "Permutation file")->required();
  decompose_cmd->add_option("-o,--output", output, "Factor file (default: stdout)");
  decompose_cmd->add_flag("--check", check, "Recompose the factors and compare");

  auto* expander_cmd = app.add_subcommand("expander", "Random cubic graphs and expansion checks");
  expander_cmd->require_subcommand(1);
  auto* gen_cmd = expander_cmd->add_subcommand("gen", "Sample a simple cubic graph");
  gen_cmd->add_option("--n2", two_n, "Vertex count (even, >= 4)")->required();
  gen_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", output, "Edge list (default: stdout)");
  auto* check_cmd = expander_cmd->add_subcommand("check", "Brute-force vertex expansion");
  check_cmd->add_option("-i,--input", input, "Cubic edge list")->required();
  check_cmd->add_option("--beta", beta_text, "Expansion threshold p/q")->capture_default_str();
  check_cmd->add_flag("--plain", plain, "key=value output instead of JSON");

  auto* bound_cmd = app.add_subcommand("bound", "Counting bounds against subdivisions in Q_d");
  bound_cmd->require_subcommand(1);
  auto* place_cmd = bound_cmd->add_subcommand("place", "Bound report for a given placement");
  place_cmd->add_option("-i,--input", input, "Guest edge list")->required();
  place_cmd->add_option("-p,--placement", placement_path, "Placement file")->required();
  place_cmd->add_option("--d", bound_d, "Host dimension")->required();
  auto* certify_cmd = bound_cmd->add_subcommand("certify", "Brute-force non-minor certificate");
  certify_cmd->add_option("-i,--input", input, "Guest edge list")->required();
  certify_cmd->add_option("--d", bound_d, "Host dimension")->required();
  auto* theorem_cmd = bound_cmd->add_subcommand("theorem", "Evaluate the final counting inequality");
  theorem_cmd->add_option("--d", bound_d, "Host dimension")->required();
  auto* tail_cmd = bound_cmd->add_subcommand("tail", "Count strings with at most d/4 ones");
  tail_cmd->add_option("--d", bound_d, "Host dimension")->required();
  for (auto* cmd : {place_cmd, certify_cmd, theorem_cmd, tail_cmd})
    cmd->add_flag("--plain", plain, "key=value output instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (embed_cmd->parsed()) {
      const auto g = read_edge_list(input);
      validate_guest(g);
      const auto params = feasible_params(g.edges.size(), dim_opt->count() ? std::optional<int>(dim_value) : std::nullopt);
      const auto model = embed(g, params.d);
      const auto json = model_to_json(model);
      std::ostream& info = output.empty() ? err : out;
      info << "a=" << params.a << " L=" << params.cycle_length << " k_t=" << params.temporal_width
           << " d=" << params.d << '\n';
      if (output.empty())
        out << json;
      else
        write_text(output, json);
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto g = read_edge_list(input);
      const auto report = verify(g, read_model(model_path));
      if (report.valid) {
        out << "valid\n";
        return 0;
      }
      for (const auto& v : report.violations) err << to_string(v.code) << ": " << v.detail << '\n';
      out << "invalid (" << report.violations.size() << " violations)\n";
      return 1;
    }

    if (decompose_cmd->parsed()) {
      const auto shape = parse_shape(shape_text);
      auto in = open_input(input);
      const auto sigma = parse_permutation(in, shape);
      const auto factors = decompose(sigma);
      std::ostringstream text;
      write_factors(text, factors);
      if (output.empty())
        out << text.str();
      else
        write_text(output, text.str());
      if (check) {
        const bool ok = compose_equals(factors, sigma);
        (output.empty() ? err : out) << "compose_equals=" << (ok ? "true" : "false") << '\n';
        return ok ? 0 : 1;
      }
      return 0;
    }

    if (gen_cmd->parsed()) {
      const auto g = gen_cubic(two_n, seed);
      std::ostringstream text;
      text << "# cubic graph, " << two_n << " vertices, seed " << seed << '\n';
      write_edge_list(text, g.graph);
      if (output.empty())
        out << text.str();
      else
        write_text(output, text.str());
      return 0;
    }

    if (check_cmd->parsed()) {
      const auto g = make_cubic(read_edge_list(input));
      const auto report = check_expansion(g, parse_ratio(beta_text));
      Json j;
      j["passes"] = report.passes;
      j["beta"] = to_string(report.beta);
      j["worst_ratio"] = to_string(report.worst_ratio);
      j["worst_set"] = json_list(report.worst_set);
      emit(out, j, plain);
      return report.passes ? 0 : 1;
    }

    if (place_cmd->parsed()) {
      const auto g = read_edge_list(input);
      auto in = open_input(placement_path);
      const auto r = bound_report(g, parse_placement(in, g, bound_d), bound_d);
      Json j;
      j["hamming_sum"] = r.hamming_sum;
      j["lower_bound"] = r.lower_bound;
      j["host_capacity"] = r.host_capacity;
      j["cut_sizes"] = json_list(r.cut_sizes);
      j["side_sizes"] = json_list(r.side_sizes);
      emit(out, j, plain);
      return 0;
    }

    if (certify_cmd->parsed()) {
      const auto cert = subcubic_nonminor_certificate(read_edge_list(input), bound_d);
      Json j;
      j["certified"] = cert.certified;
      j["min_lower_bound"] = cert.min_lower_bound;
      j["host_capacity"] = cert.host_capacity;
      emit(out, j, plain);
      return 0;
    }

    if (theorem_cmd->parsed()) {
      const auto r = theorem_inequality(bound_d);
      Json j;
      j["d"] = r.d;
      j["lhs"] = to_string(r.lhs);
      j["rhs"] = to_string(r.rhs);
      j["holds"] = r.holds;
      j["weight_tail"] = r.tail.str();
      j["tail_holds"] = r.tail_holds;
      emit(out, j, plain);
      return 0;
    }

    if (tail_cmd->parsed()) {
      Json j;
      j["d"] = bound_d;
      j["weight_tail"] = weight_tail(bound_d).str();
      emit(out, j, plain);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const AssertionError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace hcminor::cli

// Copyright 2026 The twistcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// twistcube: command-line front end for building and analysing twisted
// hypercubes. Exit codes: 0 success, 1 invalid input, 2 size guard refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistcube/twistcube.hpp"

namespace {

using nlohmann::ordered_json;
using namespace twistcube;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitGuard = 2;

struct GlobalOptions {
  int threads = 0;
  std::string format;
  bool force = false;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to --out when given, otherwise to stdout.
void emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(global.out, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + global.out);
  out << text;
}

std::string format_or(const GlobalOptions& global, const std::string& fallback,
                      std::initializer_list<std::string_view> allowed) {
  const std::string format = global.format.empty() ? fallback : global.format;
  for (auto a : allowed) {
    if (a == format) return format;
  }
  throw ValidationError("format '" + format + "' is not available for this command");
}

std::string json_text(const ordered_json& doc) { return doc.dump(2) + "\n"; }

Vertex parse_vertex(const TwistedCube& cube, const std::string& text) {
  // Either a word ("5") or a coordinate tuple ("(1,0,1)" or "1,0,1").
  std::string body = text;
  std::erase(body, '(');
  std::erase(body, ')');
  if (body.find(',') == std::string::npos) {
    std::size_t used = 0;
    unsigned long long word = 0;
    try {
      word = std::stoull(body, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad vertex '" + text + "'");
    }
    if (used != body.size() || word >= cube.vertex_count()) throw ValidationError("bad vertex '" + text + "'");
    return Vertex(static_cast<Word>(word));
  }
  if (cube.has_base()) throw ValidationError("coordinate tuples are not accepted with a base graph");
  std::vector<int> coords;
  std::stringstream in(body);
  for (std::string part; std::getline(in, part, ',');) {
    if (part != "0" && part != "1") throw ValidationError("bad coordinate '" + part + "'");
    coords.push_back(part == "1");
  }
  if (static_cast<int>(coords.size()) != cube.dimension()) {
    throw DimensionError("vertex tuple has " + std::to_string(coords.size()) + " coordinates, expected " +
                         std::to_string(cube.dimension()));
  }
  return from_coordinates(coords);
}

ordered_json spec_header(const TwistedCube& cube) {
  ordered_json doc;
  doc["model"] = to_string(cube.model());
  doc["n"] = cube.dimension();
  doc["seed"] = cube.spec().seed;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted hypercube construction and analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--threads", global.threads, "Worker threads (0: machine parallelism)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "dot", "edgelist"}));
  app.add_flag("--force", global.force, "Override size guards");
  app.add_option("-o,--out", global.out, "Output file (stdout by default)");

  std::function<void()> action;

  // gen
  std::string model_name = "duplicube";
  int n = 0;
  std::uint64_t seed = 0;
  std::string perms_path, base_path, edges_path;
  bool identity = false;
  auto* gen = app.add_subcommand("gen", "Build a cube and write its manifest");
  gen->add_option("--model", model_name, "duplicube | independent | explicit");
  gen->add_option("--n", n, "Dimension")->required();
  gen->add_option("--seed", seed, "Master seed");
  gen->add_option("--perms", perms_path, "Permutation file for the explicit model");
  gen->add_flag("--identity", identity, "Explicit model with identity tables (the plain hypercube)");
  gen->add_option("--base", base_path, "Base graph file {\"vertex_count\": k, \"edges\": [[u, v], ...]}");
  gen->add_option("--edges", edges_path, "Also write the edge list here");
  gen->callback([&] {
    action = [&] {
      TwistSpec spec;
      spec.model = parse_model(model_name);
      spec.n = n;
      spec.seed = seed;
      if (!perms_path.empty()) spec.permutations = permutations_from_json(read_file(perms_path));
      if (!base_path.empty()) {
        ordered_json doc;
        doc["model"] = model_name;
        doc["n"] = n;
        doc["seed"] = seed;
        try {
          doc["base"] = ordered_json::parse(read_file(base_path));
        } catch (const ordered_json::parse_error& e) {
          throw ValidationError(std::string("malformed base graph: ") + e.what());
        }
        spec.base = manifest_from_json(doc.dump()).base;
      }
      if (identity) {
        if (!perms_path.empty()) throw ValidationError("--identity and --perms are mutually exclusive");
        spec.model = Model::kExplicit;
        const std::uint32_t h = spec.base ? spec.base->vertex_count : 1;
        for (int level = spec.base ? 0 : 1; level < n; ++level) {
          std::vector<std::uint32_t> table(static_cast<std::size_t>(h) << level);
          std::iota(table.begin(), table.end(), 0U);
          spec.permutations.push_back(std::move(table));
        }
      }
      const auto cube = build_cube(spec);
      if (!edges_path.empty()) {
        std::ofstream out(edges_path, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("cannot write " + edges_path);
        write_edge_list(out, cube);
      }
      const std::string format = format_or(global, "json", {"json", "dot", "edgelist"});
      std::ostringstream text;
      if (format == "json") {
        text << manifest_to_json(spec);
      } else if (format == "dot") {
        write_dot(text, cube, global.force);
      } else {
        write_edge_list(text, cube);
      }
      emit(global, text.str());
    };
  });

  // Every analysis command takes the manifest as its first positional.
  std::string manifest;
  auto analysis = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("manifest", manifest, "Manifest file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto* info = analysis("info", "Construction facts");
  info->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      format_or(global, "json", {"json"});
      auto doc = spec_header(cube);
      doc["vertices"] = cube.vertex_count();
      doc["degree"] = cube.degree(Vertex(0));
      doc["edges"] = cube.vertex_count() * static_cast<std::size_t>(cube.degree(Vertex(0))) / 2;
      doc["base_size"] = cube.base_size();
      doc["per_copy_tables"] = cube.per_copy();
      emit(global, json_text(doc));
    };
  });

  bool exact = false;
  int samples = 8;
  auto* diam = analysis("diam", "Diameter (exact or sampled bounds)");
  diam->add_flag("--exact", exact, "All-pairs exact diameter");
  diam->add_option("--samples", samples, "BFS sweeps for the sampled bounds")->check(CLI::PositiveNumber);
  diam->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      format_or(global, "json", {"json"});
      auto doc = spec_header(cube);
      doc["theoretical_lower"] = diameter_lower_bound(cube.dimension());
      if (exact) {
        doc["diameter"] = diameter_exact(cube, global.force);
      } else {
        const auto bounds = diameter_bounds(cube, samples, cube.spec().seed);
        doc["lower"] = bounds.lower;
        doc["upper"] = bounds.upper;
        doc["witness"] = bounds.witness;
        doc["sources"] = bounds.sources;
      }
      emit(global, json_text(doc));
    };
  });

  std::string from, to;
  auto* route = analysis("route", "Greedy suffix-fixing route between two vertices");
  route->add_option("--from", from, "Source word or tuple")->required();
  route->add_option("--to", to, "Target word or tuple")->required();
  route->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      format_or(global, "json", {"json"});
      const auto trace = greedy_route(cube, parse_vertex(cube, from), parse_vertex(cube, to));
      if (!is_valid_route(cube, trace)) throw InternalError("greedy route failed validation");
      emit(global, route_to_json(trace, cube.dimension()));
    };
  });

  int bins = 0;
  bool histogram = false;
  int top = 0;
  auto* spectrum = analysis("spectrum", "Adjacency spectrum");
  spectrum->add_flag("--histogram", histogram, "Emit a histogram of lambda/sqrt(n) instead");
  spectrum->add_option("--bins", bins, "Histogram bins (default n + 1)")->check(CLI::PositiveNumber);
  spectrum->add_option("--top", top, "Only the leading eigenvalues, matrix-free (1..4)")->check(CLI::Range(1, 4));
  spectrum->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      const std::string format = format_or(global, "csv", {"csv", "json"});
      if (top > 0) {
        const auto result = top_eigenvalues(cube, top, {}, global.force);
        if (format == "csv") {
          std::ostringstream csv;
          write_spectrum_csv(csv, result.values);
          emit(global, csv.str());
        } else {
          auto doc = spec_header(cube);
          doc["eigenvalues"] = result.values;
          doc["residuals"] = result.residuals;
          doc["converged"] = result.converged;
          doc["iterations"] = result.iterations;
          emit(global, json_text(doc));
        }
        if (!result.converged) std::cerr << "warning: eigensolver did not converge\n";
        return;
      }
      const auto result = full_spectrum(cube, global.force);
      std::ostringstream text;
      if (histogram) {
        const auto hist = empirical_histogram(result.eigenvalues, cube.dimension(), bins);
        if (format == "csv") {
          write_histogram_csv(text, hist);
        } else {
          text << histogram_to_json(hist);
        }
      } else if (format == "csv") {
        write_spectrum_csv(text, result.eigenvalues);
      } else {
        text << spectrum_to_json(result.eigenvalues, result.n, result.seed, result.model);
      }
      emit(global, text.str());
    };
  });

  int kmax = 6;
  auto* moments = analysis("moments", "Normalized trace moments from closed-walk counts");
  moments->add_option("--kmax", kmax, "Largest moment order (<= 10)")->check(CLI::Range(1, 10));
  moments->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      const std::string format = format_or(global, "csv", {"csv", "json"});
      const auto report = walk_moments(cube, kmax, global.threads, global.force);
      std::ostringstream text;
      if (format == "csv") {
        write_moment_csv(text, report);
      } else {
        text << moments_to_json(report);
      }
      emit(global, text.str());
    };
  });

  std::string vertex_text = "0";
  int cycle_k = 4;
  bool all_vertices = false;
  auto* cycles = analysis("cycles", "Simple cycles through a vertex, by length");
  cycles->add_option("--vertex", vertex_text, "Vertex word or tuple");
  cycles->add_option("--k", cycle_k, "Largest cycle length")->check(CLI::NonNegativeNumber);
  cycles->add_flag("--all", all_vertices, "theta(v, k) for every vertex");
  cycles->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      const std::string format = format_or(global, "json", {"json", "csv"});
      std::ostringstream text;
      if (all_vertices) {
        if (format == "csv") text << "vertex,theta\n";
        auto list = ordered_json::array();
        for (std::size_t v = 0; v < cube.vertex_count(); ++v) {
          const auto theta = cycle_count(cube, Vertex(static_cast<Word>(v)), cycle_k, global.force);
          if (format == "csv") text << v << ',' << theta << '\n';
          list.push_back(theta);
        }
        if (format == "json") {
          auto doc = spec_header(cube);
          doc["k"] = cycle_k;
          doc["theta"] = std::move(list);
          text << json_text(doc);
        }
      } else {
        const Vertex v = parse_vertex(cube, vertex_text);
        const auto counts = cycles_by_length(cube, v, cycle_k, global.force);
        std::uint64_t theta = 0;
        for (auto c : counts) theta += c;
        if (format == "csv") {
          text << "length,cycles\n";
          for (std::size_t l = 3; l < counts.size(); ++l) text << l << ',' << counts[l] << '\n';
        } else {
          auto doc = spec_header(cube);
          doc["vertex"] = v.word;
          doc["k"] = cycle_k;
          doc["theta"] = theta;
          doc["by_length"] = counts;
          text << json_text(doc);
        }
      }
      emit(global, text.str());
    };
  });

  double eta = 0.25, alpha = 1.0;
  std::size_t trials = 300;
  std::uint64_t probe_seed = 1;
  auto* expand = analysis("expand", "Vertex-expansion probe");
  expand->add_option("--eta", eta, "Largest set as a fraction of |V|")->check(CLI::Range(0.0, 1.0));
  expand->add_option("--alpha", alpha, "Expansion threshold")->check(CLI::NonNegativeNumber);
  expand->add_option("--trials", trials, "Sampled sets (large cubes)");
  expand->add_option("--probe-seed", probe_seed, "Seed of the sampling streams");
  expand->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      format_or(global, "json", {"json"});
      const auto probe = expansion_probe(cube, eta, alpha, trials, probe_seed);
      auto doc = spec_header(cube);
      doc["eta"] = probe.eta;
      doc["alpha"] = probe.alpha;
      doc["max_set_size"] = probe.max_set_size;
      doc["exhaustive"] = probe.exhaustive;
      doc["sets"] = probe.sets;
      doc["below_alpha"] = probe.below_alpha;
      doc["min_ratio"] = probe.min_ratio;
      doc["worst_family"] = probe.worst_family;
      std::vector<Word> worst;
      for (auto v : probe.worst_set) worst.push_back(v.word);
      doc["worst_set"] = worst;
      auto families = ordered_json::array();
      for (const auto& f : probe.families) {
        ordered_json entry;
        entry["family"] = f.name;
        entry["sets"] = f.sets;
        entry["below_alpha"] = f.below_alpha;
        entry["min_ratio"] = f.min_ratio;
        entry["min_size"] = f.min_size;
        families.push_back(std::move(entry));
      }
      doc["families"] = std::move(families);
      emit(global, json_text(doc));
    };
  });

  auto* aut = analysis("aut", "Automorphism group");
  aut->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      format_or(global, "json", {"json"});
      emit(global, aut_report_to_json(automorphisms(cube, global.force)));
    };
  });

  auto* matchcut = analysis("matchcut", "Exhaustive matching-cut search");
  matchcut->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      const std::string format = format_or(global, "json", {"json", "csv"});
      const auto cuts = matching_cut_search(cube, global.force);
      const auto count = static_cast<std::uint32_t>(cube.vertex_count());
      if (format == "json") {
        emit(global, matching_cuts_to_json(cuts, count));
      } else {
        std::ostringstream text;
        text << "side,crossing_edges,trivial\n";
        for (const auto& cut : cuts) {
          text << mask_to_hex(cut.side, count) << ',' << cut.crossing_edges << ',' << (cut.trivial ? 1 : 0) << '\n';
        }
        emit(global, text.str());
      }
    };
  });

  auto* order = analysis("order", "Partial order from oriented twist edges");
  order->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      const std::string format = format_or(global, "json", {"json", "edgelist", "dot"});
      const auto po = partial_order_build(cube, global.force);
      std::ostringstream text;
      if (format == "json") {
        auto doc = spec_header(cube);
        doc["acyclic"] = true;
        doc["minimal"] = po.minimal_elements();
        doc["maximal"] = po.maximal_elements();
        doc["topological_order"] = po.topological_order();
        text << json_text(doc);
      } else if (format == "edgelist") {
        for (std::uint32_t v = 0; v < po.vertex_count(); ++v) {
          for (auto u : po.successors()[v]) text << v << ' ' << u << '\n';
        }
      } else {
        text << "digraph order {\n";
        for (std::uint32_t v = 0; v < po.vertex_count(); ++v) {
          for (auto u : po.successors()[v]) text << "  " << v << " -> " << u << ";\n";
        }
        text << "}\n";
      }
      emit(global, text.str());
    };
  });

  int t_max = 64;
  std::string start_text = "0";
  double threshold = 0.25;
  auto* mix = analysis("mix", "Lazy random walk total-variation profile");
  mix->add_option("--tmax", t_max, "Steps to simulate")->check(CLI::NonNegativeNumber);
  mix->add_option("--start", start_text, "Start vertex word or tuple");
  mix->add_option("--threshold", threshold, "Mixing threshold")->check(CLI::Range(0.0, 1.0));
  mix->callback([&] {
    action = [&] {
      const auto cube = build_cube(load_manifest(manifest));
      const std::string format = format_or(global, "json", {"json", "csv"});
      const auto profile = mixing_profile(cube, t_max, parse_vertex(cube, start_text), threshold, global.force);
      std::ostringstream text;
      if (format == "csv") {
        text << "t,tv\n";
        for (std::size_t t = 0; t < profile.tv.size(); ++t) text << t << ',' << format_double(profile.tv[t]) << '\n';
      } else {
        auto doc = spec_header(cube);
        doc["start"] = profile.start.word;
        doc["threshold"] = profile.threshold;
        doc["t_mix"] = profile.t_mix ? ordered_json(*profile.t_mix) : ordered_json(nullptr);
        doc["tv"] = profile.tv;
        text << json_text(doc);
      }
      emit(global, text.str());
    };
  });

  std::string plan_path, out_dir;
  auto* batch = app.add_subcommand("batch", "Run an experiment plan");
  batch->add_option("plan", plan_path, "Plan file")->required()->check(CLI::ExistingFile);
  batch->add_option("--out-dir", out_dir, "Override the plan's output directory");
  batch->callback([&] {
    action = [&] {
      auto plan = load_plan(plan_path);
      if (!out_dir.empty()) plan.output_dir = out_dir;
      if (global.threads > 0) plan.threads = global.threads;
      const auto outcome = run_plan(plan);
      for (const auto& file : outcome.files) std::cout << file.string() << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (action) action();
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

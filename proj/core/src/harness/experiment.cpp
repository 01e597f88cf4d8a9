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

#include "twistcube/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "twistcube/errors.hpp"
#include "twistcube/metrics/distance.hpp"
#include "twistcube/metrics/expansion.hpp"
#include "twistcube/metrics/matching_cut.hpp"
#include "twistcube/metrics/mixing.hpp"
#include "twistcube/metrics/partial_order.hpp"
#include "twistcube/metrics/routing.hpp"
#include "twistcube/spectral/cycles.hpp"
#include "twistcube/spectral/histogram.hpp"
#include "twistcube/spectral/moments.hpp"
#include "twistcube/spectral/spectrum.hpp"
#include "twistcube/symmetry/automorphism.hpp"
#include "twistcube/topology/manifest.hpp"

namespace twistcube {

namespace {

using nlohmann::json;

const std::map<std::string, std::set<std::string>, std::less<>>& known_operations() {
  static const std::map<std::string, std::set<std::string>, std::less<>> ops = {
      {"info", {}},
      {"diameter", {"force"}},
      {"diameter_bounds", {"samples"}},
      {"route", {"pairs"}},
      {"spectrum", {}},
      {"histogram", {"bins"}},
      {"top_eigen", {"count"}},
      {"moments", {"kmax"}},
      {"cycles", {"k"}},
      {"second_neighborhood", {}},
      {"expansion", {"eta", "alpha", "trials"}},
      {"automorphisms", {}},
      {"matchcut", {}},
      {"order", {}},
      {"mixing", {"t_max", "threshold"}},
      {"cut", {}},
  };
  return ops;
}

std::string file_stem(const TwistedCube& cube) {
  return std::string(to_string(cube.model())) + "_n" + std::to_string(cube.dimension()) + "_s" +
         std::to_string(cube.spec().seed);
}

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::filesystem::path>& files) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
  files.push_back(path);
}

class RowSink {
 public:
  explicit RowSink(const TwistedCube& cube) : cube_(cube) {}

  void add(std::string metric, std::string value) {
    rows_.push_back(MetricRow{cube_.model(), cube_.dimension(), cube_.spec().seed, std::move(metric),
                              std::move(value)});
  }
  void add(std::string metric, double value) { add(std::move(metric), format_double(value)); }
  void add(std::string metric, std::uint64_t value) { add(std::move(metric), std::to_string(value)); }
  void add(std::string metric, int value) { add(std::move(metric), std::to_string(value)); }

  std::vector<MetricRow> take() { return std::move(rows_); }

 private:
  const TwistedCube& cube_;
  std::vector<MetricRow> rows_;
};

int int_param(const Operation& op, std::string_view key, int fallback) {
  return static_cast<int>(op.param(key, fallback));
}

}  // namespace

double Operation::param(std::string_view key, double fallback) const {
  const auto it = params.find(std::string(key));
  return it == params.end() ? fallback : it->second;
}

ExperimentPlan plan_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed plan: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("plan must be a JSON object");
  ExperimentPlan plan;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "spec") {
        plan.spec = manifest_from_json(value.dump());
      } else if (key == "seeds") {
        if (!value.is_array()) throw ValidationError("\"seeds\" must be an array");
        for (const auto& seed : value) {
          if (!seed.is_number_unsigned()) throw ValidationError("plan seeds must be non-negative integers");
          plan.seeds.push_back(seed.get<std::uint64_t>());
        }
      } else if (key == "operations") {
        for (const auto& entry : value) {
          Operation op;
          for (const auto& [okey, ovalue] : entry.items()) {
            if (okey == "op") {
              op.name = ovalue.get<std::string>();
            } else if (okey == "params") {
              for (const auto& [pkey, pvalue] : ovalue.items()) op.params[pkey] = pvalue.get<double>();
            } else {
              throw ValidationError("unknown operation key '" + okey + "'");
            }
          }
          const auto known = known_operations().find(op.name);
          if (known == known_operations().end()) throw ValidationError("unknown operation '" + op.name + "'");
          for (const auto& [pkey, pvalue] : op.params) {
            if (!known->second.contains(pkey)) {
              throw ValidationError("operation '" + op.name + "' has no parameter '" + pkey + "'");
            }
          }
          plan.operations.push_back(std::move(op));
        }
      } else if (key == "output_dir") {
        plan.output_dir = value.get<std::string>();
      } else if (key == "threads") {
        plan.threads = value.get<int>();
      } else {
        throw ValidationError("unknown plan key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed plan: ") + e.what());
  }
  if (!doc.contains("spec")) throw ValidationError("plan is missing 'spec'");
  if (plan.seeds.empty()) plan.seeds.push_back(plan.spec.seed);
  if (plan.threads < 0) throw ValidationError("threads must be non-negative");
  return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return plan_from_json(buffer.str());
}

std::vector<MetricRow> run_operation(const TwistedCube& cube, const Operation& op, std::size_t op_index,
                                     const std::filesystem::path& dir, std::vector<std::filesystem::path>& files) {
  RowSink sink(cube);
  const int n = cube.dimension();
  const std::uint64_t seed = cube.spec().seed;
  const std::string& name = op.name;

  if (name == "info") {
    const Graph g = to_graph(cube);
    std::uint32_t dmin = g.vertex_count() ? g.degree(0) : 0, dmax = dmin;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      dmin = std::min(dmin, g.degree(v));
      dmax = std::max(dmax, g.degree(v));
    }
    sink.add("vertices", std::uint64_t{g.vertex_count()});
    sink.add("edges", std::uint64_t{g.edge_count()});
    sink.add("degree_min", std::uint64_t{dmin});
    sink.add("degree_max", std::uint64_t{dmax});
  } else if (name == "diameter") {
    sink.add("diameter", diameter_exact(cube, op.param("force", 0) != 0));
    sink.add("diameter_lower_bound", diameter_lower_bound(n));
  } else if (name == "diameter_bounds") {
    const auto bounds = diameter_bounds(cube, int_param(op, "samples", 8), task_stream(seed, op_index).next());
    sink.add("diameter_lower", bounds.lower);
    sink.add("diameter_upper", bounds.upper);
    sink.add("diameter_lower_bound", bounds.theoretical_lower);
  } else if (name == "route") {
    const int pairs = int_param(op, "pairs", 1000);
    if (pairs < 1) throw ValidationError("pairs must be positive");
    auto stream = task_stream(seed, op_index);
    int longest = 0;
    std::uint64_t total = 0, invalid = 0;
    for (int i = 0; i < pairs; ++i) {
      const Vertex s(static_cast<Word>(stream.bounded(cube.vertex_count())));
      const Vertex t(static_cast<Word>(stream.bounded(cube.vertex_count())));
      const auto trace = greedy_route(cube, s, t);
      longest = std::max(longest, trace.length());
      total += static_cast<std::uint64_t>(trace.length());
      invalid += !is_valid_route(cube, trace);
    }
    sink.add("route_max_length", longest);
    sink.add("route_mean_length", static_cast<double>(total) / pairs);
    sink.add("route_invalid", invalid);
  } else if (name == "spectrum") {
    const auto spectrum = full_spectrum(cube);
    std::ostringstream csv;
    write_spectrum_csv(csv, spectrum.eigenvalues);
    write_file(dir / ("spectrum_" + file_stem(cube) + ".csv"), csv.str(), files);
    sink.add("lambda1", spectrum.eigenvalues.front());
    sink.add("lambda2", spectrum.eigenvalues.size() > 1 ? spectrum.eigenvalues[1] : spectrum.eigenvalues.front());
    sink.add("lambda_min", spectrum.eigenvalues.back());
  } else if (name == "histogram") {
    const auto spectrum = full_spectrum(cube);
    const auto hist = empirical_histogram(spectrum.eigenvalues, n, int_param(op, "bins", 0));
    std::ostringstream csv;
    write_histogram_csv(csv, hist);
    write_file(dir / ("histogram_" + file_stem(cube) + ".csv"), csv.str(), files);
    sink.add("l1_semicircle", hist.l1_semicircle);
    sink.add("l1_gaussian", hist.l1_gaussian);
  } else if (name == "top_eigen") {
    const auto top = top_eigenvalues(cube, int_param(op, "count", 2));
    for (std::size_t i = 0; i < top.values.size(); ++i) {
      sink.add("lambda" + std::to_string(i + 1), top.values[i]);
    }
    sink.add("top_eigen_converged", top.converged ? 1 : 0);
  } else if (name == "moments") {
    const auto report = walk_moments(cube, int_param(op, "kmax", 6), 1);
    std::ostringstream csv;
    write_moment_csv(csv, report);
    write_file(dir / ("moments_" + file_stem(cube) + ".csv"), csv.str(), files);
    for (const auto& row : report.rows) sink.add("m" + std::to_string(row.k), row.m_k);
  } else if (name == "cycles") {
    const int k = int_param(op, "k", 4);
    std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
    for (std::size_t v = 0; v < cube.vertex_count(); ++v) {
      const auto theta = cycle_count(cube, Vertex(static_cast<Word>(v)), k);
      lo = std::min(lo, theta);
      hi = std::max(hi, theta);
    }
    sink.add("theta_min", lo);
    sink.add("theta_max", hi);
  } else if (name == "second_neighborhood") {
    std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
    for (std::size_t v = 0; v < cube.vertex_count(); ++v) {
      const std::uint64_t size = second_neighborhood(cube, Vertex(static_cast<Word>(v)));
      lo = std::min(lo, size);
      hi = std::max(hi, size);
    }
    sink.add("second_neighborhood_min", lo);
    sink.add("second_neighborhood_max", hi);
  } else if (name == "expansion") {
    const auto probe = expansion_probe(cube, op.param("eta", 0.25), op.param("alpha", 1.0),
                                       static_cast<std::size_t>(op.param("trials", 200)),
                                       task_stream(seed, op_index).next());
    sink.add("expansion_sets", std::uint64_t{probe.sets});
    sink.add("expansion_below_alpha", std::uint64_t{probe.below_alpha});
    sink.add("expansion_min_ratio", probe.min_ratio);
  } else if (name == "automorphisms") {
    const auto aut = automorphisms(cube);
    std::uint64_t swap = 0, preserve = 0, other = 0;
    for (auto kind : aut.kinds) {
      swap += kind == AutKind::kSwap;
      preserve += kind == AutKind::kPreserve;
      other += kind == AutKind::kOther;
    }
    sink.add("aut_order", aut.order_string());
    sink.add("aut_generators", std::uint64_t{aut.generators.size()});
    sink.add("aut_swap", swap);
    sink.add("aut_preserve", preserve);
    sink.add("aut_other", other);
    sink.add("vertex_transitive", aut.orbit_count() == 1 ? 1 : 0);
  } else if (name == "matchcut") {
    const auto cuts = matching_cut_search(cube);
    std::uint64_t nontrivial = 0;
    for (const auto& cut : cuts) nontrivial += !cut.trivial;
    sink.add("matching_cuts", std::uint64_t{cuts.size()});
    sink.add("matching_cuts_nontrivial", nontrivial);
  } else if (name == "order") {
    const auto order = partial_order_build(cube);
    sink.add("order_minimal", std::uint64_t{order.minimal_elements().size()});
    sink.add("order_maximal", std::uint64_t{order.maximal_elements().size()});
  } else if (name == "mixing") {
    const auto profile = mixing_profile(cube, int_param(op, "t_max", 64), Vertex(0), op.param("threshold", 0.25));
    sink.add("t_mix", profile.t_mix ? std::to_string(*profile.t_mix) : std::string("none"));
    sink.add("tv_final", profile.tv.back());
  } else if (name == "cut") {
    std::uint64_t crossing = 0;
    for (std::size_t v = 0; v < cube.vertex_count(); ++v) {
      const Vertex x(static_cast<Word>(v));
      if (cube.coordinate_of(x, n) != 0) continue;
      cube.for_each_neighbor(x, [&](Vertex u, int) { crossing += cube.coordinate_of(u, n); });
    }
    sink.add("top_cut_edges", crossing);
  } else {
    throw ValidationError("unknown operation '" + name + "'");
  }
  return sink.take();
}

PlanOutcome run_plan(const ExperimentPlan& plan) {
  validate(plan.spec);
  if (std::set<std::uint64_t>(plan.seeds.begin(), plan.seeds.end()).size() != plan.seeds.size()) {
    throw ValidationError("plan seeds must be distinct");
  }
  std::filesystem::create_directories(plan.output_dir);
  const std::size_t ops = plan.operations.size();
  const std::size_t tasks = plan.seeds.size() * ops;
  std::vector<std::vector<MetricRow>> rows(tasks);
  std::vector<std::vector<std::filesystem::path>> files(tasks);
  std::vector<std::exception_ptr> errors(tasks);

  unsigned workers = plan.threads > 0 ? static_cast<unsigned>(plan.threads)
                                      : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, tasks)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
      try {
        TwistSpec spec = plan.spec;
        spec.seed = plan.seeds[t / ops];
        const auto cube = build_cube(spec);
        rows[t] = run_operation(cube, plan.operations[t % ops], t % ops, plan.output_dir, files[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  PlanOutcome outcome;
  for (std::size_t t = 0; t < tasks; ++t) {
    outcome.rows.insert(outcome.rows.end(), rows[t].begin(), rows[t].end());
    outcome.files.insert(outcome.files.end(), files[t].begin(), files[t].end());
  }
  std::ostringstream csv;
  write_metric_csv(csv, outcome.rows);
  write_file(plan.output_dir / "results.csv", csv.str(), outcome.files);
  std::sort(outcome.files.begin(), outcome.files.end());
  return outcome;
}

}  // namespace twistcube

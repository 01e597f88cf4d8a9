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

#include "twistcube/topology/manifest.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "twistcube/errors.hpp"
#include "twistcube/topology/graph.hpp"

namespace twistcube {

using nlohmann::json;

namespace {

std::string compact_row(const std::vector<std::uint32_t>& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(row[i]);
  }
  out += ']';
  return out;
}

std::string tables_block(const std::vector<std::vector<std::uint32_t>>& tables, std::string_view indent) {
  std::string out = "[";
  for (std::size_t i = 0; i < tables.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += indent;
    out += "  ";
    out += compact_row(tables[i]);
  }
  if (!tables.empty()) {
    out += '\n';
    out += indent;
  }
  out += ']';
  return out;
}

std::vector<std::uint32_t> read_row(const json& row) {
  if (!row.is_array()) throw ValidationError("permutation table must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > static_cast<std::int64_t>(UINT32_MAX)) {
      throw ValidationError("permutation entries must be non-negative integers");
    }
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> read_tables(const json& doc) {
  if (!doc.is_array()) throw ValidationError("permutations must be an array of arrays");
  std::vector<std::vector<std::uint32_t>> tables;
  tables.reserve(doc.size());
  for (const auto& row : doc) tables.push_back(read_row(row));
  return tables;
}

json parse_or_throw(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string manifest_to_json(const TwistSpec& spec) {
  std::string out = "{\n";
  out += "  \"model\": " + json(std::string(to_string(spec.model))).dump() + ",\n";
  out += "  \"n\": " + std::to_string(spec.n) + ",\n";
  out += "  \"seed\": " + std::to_string(spec.seed);
  if (!spec.permutations.empty()) {
    out += ",\n  \"permutations\": " + tables_block(spec.permutations, "  ");
  }
  if (spec.base) {
    out += ",\n  \"base\": {\n    \"vertex_count\": " + std::to_string(spec.base->vertex_count) +
           ",\n    \"edges\": [";
    const auto edges = spec.base->edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i > 0) out += ',';
      out += '[' + std::to_string(edges[i].first) + ',' + std::to_string(edges[i].second) + ']';
    }
    out += "]\n  }";
  }
  out += "\n}\n";
  return out;
}

TwistSpec manifest_from_json(std::string_view text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_object()) throw ValidationError("manifest must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "model" && key != "n" && key != "seed" && key != "permutations" && key != "base") {
      throw ValidationError("unknown manifest key '" + key + "'");
    }
  }
  TwistSpec spec;
  try {
    if (!doc.contains("model") || !doc.at("model").is_string()) {
      throw ValidationError("manifest needs a string \"model\"");
    }
    spec.model = parse_model(doc.at("model").get<std::string>());
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
      throw ValidationError("manifest needs an integer \"n\"");
    }
    spec.n = doc.at("n").get<int>();
    if (doc.contains("seed")) {
      const auto& seed = doc.at("seed");
      if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
        throw ValidationError("\"seed\" must be a non-negative integer");
      }
      spec.seed = seed.get<std::uint64_t>();
    }
    if (doc.contains("permutations")) spec.permutations = read_tables(doc.at("permutations"));
    if (doc.contains("base")) {
      const auto& base = doc.at("base");
      if (!base.is_object() || !base.contains("vertex_count") || !base.at("vertex_count").is_number_integer()) {
        throw ValidationError("\"base\" needs an integer vertex_count");
      }
      const auto count = base.at("vertex_count").get<std::int64_t>();
      if (count < 1 || count > static_cast<std::int64_t>(UINT32_MAX)) {
        throw ValidationError("base vertex_count out of range");
      }
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      if (base.contains("edges")) {
        for (const auto& e : base.at("edges")) {
          const auto row = read_row(e);
          if (row.size() != 2) throw ValidationError("base edges must be [u, v] pairs");
          edges.emplace_back(row[0], row[1]);
        }
      }
      spec.base = BaseGraph::from_edges(static_cast<std::uint32_t>(count), edges);
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad manifest field: ") + e.what());
  }
  validate(spec);
  return spec;
}

void save_manifest(const std::filesystem::path& path, const TwistSpec& spec) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << manifest_to_json(spec);
}

TwistSpec load_manifest(const std::filesystem::path& path) {
  return manifest_from_json(read_file(path));
}

std::string permutations_to_json(const std::vector<std::vector<std::uint32_t>>& tables) {
  return tables_block(tables, "") + "\n";
}

std::vector<std::vector<std::uint32_t>> permutations_from_json(std::string_view text) {
  try {
    return read_tables(parse_or_throw(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad permutation file: ") + e.what());
  }
}

void write_edge_list(std::ostream& out, const TwistedCube& cube) {
  const Graph g = to_graph(cube);
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const TwistedCube& cube, bool force) {
  if (cube.dimension() > 8 && !force) {
    throw GuardError("DOT export is limited to n <= 8");
  }
  out << "graph twisted_cube {\n";
  out << "  // model=" << to_string(cube.model()) << " n=" << cube.dimension()
      << " seed=" << cube.spec().seed << "\n";
  for (std::size_t x = 0; x < cube.vertex_count(); ++x) {
    const Vertex u(static_cast<Word>(x));
    cube.for_each_neighbor(u, [&](Vertex v, int generation) {
      if (u.word < v.word) {
        out << "  " << u.word << " -- " << v.word << " [label=" << generation << "];\n";
      }
    });
  }
  out << "}\n";
}

}  // namespace twistcube

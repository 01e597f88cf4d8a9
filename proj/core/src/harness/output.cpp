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

#include "twistcube/harness/output.hpp"

#include <array>
#include <charconv>
#include <numbers>

#include "json.hpp"

namespace twistcube {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

void write_spectrum_csv(std::ostream& out, std::span<const double> eigenvalues) {
  out << "index,eigenvalue\n";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) out << i << ',' << format_double(eigenvalues[i]) << '\n';
}

void write_moment_csv(std::ostream& out, const MomentReport& report) {
  out << "k,m_k,catalan,abs_error\n";
  for (const auto& row : report.rows) {
    out << row.k << ',' << format_double(row.m_k) << ',' << format_double(row.catalan) << ','
        << format_double(row.abs_error) << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& histogram) {
  out << "bin_left,bin_right,mass,semicircle_ref,gaussian_ref\n";
  for (const auto& bin : histogram.bins) {
    out << format_double(bin.left) << ',' << format_double(bin.right) << ',' << format_double(bin.mass) << ','
        << format_double(bin.semicircle_ref) << ',' << format_double(bin.gaussian_ref) << '\n';
  }
}

void write_metric_csv(std::ostream& out, std::span<const MetricRow> rows) {
  out << "model,n,seed,metric,value\n";
  for (const auto& row : rows) {
    out << to_string(row.model) << ',' << row.n << ',' << row.seed << ',' << row.metric << ',' << row.value << '\n';
  }
}

std::string spectrum_to_json(std::span<const double> eigenvalues, int n, std::uint64_t seed, Model model) {
  ordered_json doc;
  doc["model"] = to_string(model);
  doc["n"] = n;
  doc["seed"] = seed;
  doc["eigenvalues"] = std::vector<double>(eigenvalues.begin(), eigenvalues.end());
  return dump(doc);
}

std::string moments_to_json(const MomentReport& report) {
  ordered_json doc;
  doc["model"] = to_string(report.model);
  doc["n"] = report.n;
  doc["seed"] = report.seed;
  auto rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["k"] = row.k;
    r["closed_walks"] = row.closed_walks.str();
    r["m_k"] = row.m_k;
    r["catalan"] = row.catalan;
    r["abs_error"] = row.abs_error;
    rows.push_back(std::move(r));
  }
  doc["moments"] = std::move(rows);
  return dump(doc);
}

std::string histogram_to_json(const Histogram& histogram) {
  ordered_json doc;
  doc["semicircle_constant_printed"] = 2.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  doc["semicircle_constant_normalized"] = 1.0 / (2.0 * std::numbers::pi);
  doc["l1_semicircle"] = histogram.l1_semicircle;
  doc["l1_gaussian"] = histogram.l1_gaussian;
  auto bins = ordered_json::array();
  for (const auto& bin : histogram.bins) {
    ordered_json b;
    b["bin_left"] = bin.left;
    b["bin_right"] = bin.right;
    b["mass"] = bin.mass;
    b["semicircle_ref"] = bin.semicircle_ref;
    b["semicircle_printed_ref"] = bin.semicircle_printed;
    b["gaussian_ref"] = bin.gaussian_ref;
    bins.push_back(std::move(b));
  }
  doc["bins"] = std::move(bins);
  return dump(doc);
}

std::string route_to_json(const RouteTrace& trace, int n) {
  ordered_json doc;
  doc["source"] = trace.source.word;
  doc["target"] = trace.target.word;
  doc["source_tuple"] = to_tuple_string(trace.source, n);
  doc["target_tuple"] = to_tuple_string(trace.target, n);
  doc["length"] = trace.length();
  auto hops = ordered_json::array();
  for (const auto& hop : trace.hops) {
    ordered_json h;
    h["vertex"] = hop.vertex.word;
    h["generation"] = hop.generation;
    hops.push_back(std::move(h));
  }
  doc["hops"] = std::move(hops);
  return dump(doc);
}

std::string aut_report_to_json(const AutReport& report) {
  ordered_json doc;
  doc["order"] = report.order_string();
  doc["orbits"] = report.orbit_count();
  auto gens = ordered_json::array();
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    ordered_json g;
    g["kind"] = to_string(report.kinds[i]);
    g["image"] = report.generators[i];
    gens.push_back(std::move(g));
  }
  doc["generators"] = std::move(gens);
  return dump(doc);
}

std::string matching_cuts_to_json(std::span<const MatchingCut> cuts, std::uint32_t vertex_count) {
  ordered_json doc;
  doc["vertex_count"] = vertex_count;
  doc["count"] = cuts.size();
  auto list = ordered_json::array();
  for (const auto& cut : cuts) {
    ordered_json c;
    c["side"] = mask_to_hex(cut.side, vertex_count);
    c["crossing_edges"] = cut.crossing_edges;
    c["trivial"] = cut.trivial;
    list.push_back(std::move(c));
  }
  doc["cuts"] = std::move(list);
  return dump(doc);
}

}  // namespace twistcube

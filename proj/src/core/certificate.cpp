// Copyright 2026 The cubic2ec Authors
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

#include "core/certificate.hpp"

#include <json.hpp>

#include "core/connectivity.hpp"
#include "core/errors.hpp"

namespace cubic2ec {

using nlohmann::json;

EdgeSet min_support_subgraph(const Certificate& cert) {
  require(!cert.combination.empty(), "certificate has no members");
  EdgeSet best = cert.combination.entries()[0].edges;
  for (const auto& entry : cert.combination.entries()) {
    const EdgeSet h = entry.edges;
    if (h.size() < best.size() || (h.size() == best.size() && lex_less(h, best))) best = h;
  }
  return best;
}

int support_bound(int order) { return 7 * order / 6; }

bool VerificationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

std::string VerificationReport::to_json() const {
  json out;
  out["ok"] = ok();
  out["checks"] = json::array();
  for (const auto& c : checks) {
    out["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return out.dump();
}

VerificationReport verify_certificate(const Graph& g, const Certificate& cert) {
  VerificationReport report;
  auto check = [&report](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  };
  const auto entries = cert.combination.entries();
  const int m = g.size();

  const bool graph_ok = check("graph_matches", cert.graph == g,
                              cert.graph == g ? "" : "certificate was issued for another graph");
  check("target", cert.target == seven_ninths(), "target " + to_display_string(cert.target));
  check("nonempty", !entries.empty());

  bool positive = true;
  Rational sum = 0;
  for (const auto& e : entries) {
    positive = positive && e.weight > 0;
    sum += e.weight;
  }
  check("weights_positive", positive);
  check("weights_sum_to_one", sum == 1, "sum " + to_display_string(sum));

  const EdgeSet host = m <= kMaxEdges ? EdgeSet::all(m) : EdgeSet();
  bool in_range = m <= kMaxEdges && cert.combination.edge_count() == m;
  for (const auto& e : entries) in_range = in_range && e.edges.is_subset_of(host);
  const bool range_ok = check("edges_in_range", in_range);

  if (!graph_ok || !range_ok) {
    check("members_2ec_spanning", false, "skipped: edge ids do not refer to this graph");
    check("uniform_occurrence", false, "skipped: edge ids do not refer to this graph");
    check("min_support_bound", false, "skipped: edge ids do not refer to this graph");
    return report;
  }

  std::size_t bad_member = entries.size();
  for (std::size_t i = 0; i < entries.size() && bad_member == entries.size(); ++i) {
    if (!is_2ec(g, entries[i].edges)) bad_member = i;
  }
  check("members_2ec_spanning", bad_member == entries.size(),
        bad_member == entries.size() ? "" : "member " + std::to_string(bad_member) + " fails");

  std::vector<Rational> occ(m, Rational(0));
  for (const auto& e : entries) {
    for (EdgeId id : e.edges.ids()) occ[id] += e.weight;
  }
  EdgeId off = -1;
  for (EdgeId e = 0; e < m && off < 0; ++e) {
    if (occ[e] != seven_ninths()) off = e;
  }
  check("uniform_occurrence", off < 0,
        off < 0 ? "" : "edge " + std::to_string(off) + " occurs " + to_display_string(occ[off]));

  if (entries.empty()) {
    check("min_support_bound", false, "no members");
  } else {
    const int support = min_support_subgraph(cert).size();
    check("min_support_bound", support <= support_bound(g.order()),
          std::to_string(support) + " <= " + std::to_string(support_bound(g.order())));
  }
  return report;
}

namespace {

json vertex_list(VertexMask mask) {
  json out = json::array();
  for (VertexMask m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexMask mask_from_list(const json& list) {
  VertexMask m = 0;
  for (const auto& v : list) {
    const int x = v.get<int>();
    if (x < 0 || x >= 64) fail(ErrorCode::kFormat, "vertex id out of range in trace");
    m |= VertexMask{1} << x;
  }
  return m;
}

json trace_to_json(const TraceRecord& r) {
  json out;
  out["graph6"] = r.graph6;
  out["step"] = step_kind_name(r.kind);
  out["n"] = r.order;
  out["entries"] = r.entries;
  switch (r.kind) {
    case StepKind::kBase:
      out["base_candidates"] = r.base_candidates;
      break;
    case StepKind::kShoreContraction:
      out["cut_shore"] = vertex_list(r.cut_shore.value_or(0));
      out["cut_edges"] = r.cut_edges;
      break;
    case StepKind::kEdgeRemoval: {
      json pivots = json::array();
      for (const auto& p : r.pivots) {
        json jp;
        jp["pivot"] = p.pivot;
        jp["orientation"] = p.orientation == Orientation::kFirst ? 1 : 2;
        jp["first_removal"] = p.first_removal;
        jp["second_removal"] = p.second_removal;
        jp["witness_shore"] = p.witness_shore ? vertex_list(*p.witness_shore) : json(nullptr);
        jp["t"] = p.profile.t;
        jp["r"] = p.profile.r;
        jp["children"] = p.children;
        pivots.push_back(std::move(jp));
      }
      out["pivots"] = std::move(pivots);
      out["padded"] = r.padded;
      break;
    }
  }
  out["children"] = r.children;
  return out;
}

TraceRecord trace_from_json(const json& j) {
  TraceRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  const std::string step = j.at("step").get<std::string>();
  r.order = j.at("n").get<int>();
  r.entries = j.at("entries").get<std::size_t>();
  if (step == "base") {
    r.kind = StepKind::kBase;
    r.base_candidates = j.value("base_candidates", 0);
  } else if (step == "shore_contraction") {
    r.kind = StepKind::kShoreContraction;
    r.cut_shore = mask_from_list(j.at("cut_shore"));
    r.cut_edges = j.at("cut_edges").get<std::vector<EdgeId>>();
  } else if (step == "edge_removal") {
    r.kind = StepKind::kEdgeRemoval;
    for (const auto& jp : j.at("pivots")) {
      PivotRecord p;
      p.pivot = jp.at("pivot").get<EdgeId>();
      p.orientation = jp.at("orientation").get<int>() == 1 ? Orientation::kFirst
                                                            : Orientation::kSecond;
      p.first_removal = jp.at("first_removal").get<std::array<EdgeId, 2>>();
      p.second_removal = jp.at("second_removal").get<std::array<EdgeId, 2>>();
      if (!jp.at("witness_shore").is_null()) p.witness_shore = mask_from_list(jp["witness_shore"]);
      p.profile = {jp.at("t").get<int>(), jp.at("r").get<int>()};
      p.children = jp.at("children").get<std::array<std::string, 2>>();
      r.pivots.push_back(std::move(p));
    }
    r.padded = j.at("padded").get<bool>();
  } else {
    fail(ErrorCode::kFormat, "unknown trace step '" + step + "'");
  }
  r.children = j.at("children").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  json out;
  out["n"] = cert.graph.order();
  json edges = json::array();
  for (const Edge& e : cert.graph.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  out["target"] = to_fraction_string(cert.target);
  json entries = json::array();
  for (const auto& entry : cert.combination.entries()) {
    entries.push_back({{"weight", to_fraction_string(entry.weight)}, {"edges", entry.edges.ids()}});
  }
  out["entries"] = std::move(entries);
  json trace = json::array();
  for (const auto& r : cert.trace) trace.push_back(trace_to_json(r));
  out["trace"] = std::move(trace);
  out["min_support_size"] =
      cert.combination.empty() ? 0 : min_support_subgraph(cert).size();
  return out.dump() + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("certificate JSON: ") + e.what());
  }
  try {
    Certificate cert;
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::kFormat, "edges must be [u, v] pairs");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    cert.graph = Graph(n, std::move(edges));
    cert.target = parse_rational(j.at("target").get<std::string>());
    std::vector<WeightedSubgraph> entries;
    for (const auto& je : j.at("entries")) {
      WeightedSubgraph ws;
      ws.weight = parse_rational(je.at("weight").get<std::string>());
      for (const auto& id : je.at("edges")) {
        const int e = id.get<int>();
        if (e < 0 || e >= kMaxEdges) fail(ErrorCode::kFormat, "entry edge id out of range");
        ws.edges.insert(e);
      }
      entries.push_back(ws);
    }
    cert.combination = ConvexCombination::from_raw(cert.graph.size(), std::move(entries));
    if (j.contains("trace")) {
      for (const auto& r : j.at("trace")) cert.trace.push_back(trace_from_json(r));
    }
    return cert;
  } catch (const json::exception& e) {
    fail(ErrorCode::kFormat, std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace cubic2ec

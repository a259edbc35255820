// Copyright 2026 The minorprop Authors
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

#include "minorprop/certificate.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "minorprop/errors.h"

namespace minorprop {
namespace {

using nlohmann::json;

VerifyResult Fail(VerifyError e, std::string detail) {
  return VerifyResult{e, std::move(detail)};
}

bool InRange(const Graph& g, Vertex v) { return v >= 1 && v <= g.n(); }

VerifyResult VerifyCycle(const Graph& g, const SimpleCycle& c,
                         const VerifyOptions& options) {
  const auto& vs = c.vertices;
  if (vs.size() < std::max<std::size_t>(options.min_cycle_length, 3)) {
    return Fail(VerifyError::kTooShort,
                "cycle length " + std::to_string(vs.size()));
  }
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    if (!InRange(g, v)) return Fail(VerifyError::kOutOfRange, std::to_string(v));
    if (!seen.insert(v).second) {
      return Fail(VerifyError::kRepeatedVertex, std::to_string(v));
    }
  }
  int parity = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (!g.HasEdge(a, b)) {
      return Fail(VerifyError::kMissingEdge,
                  std::to_string(a) + "-" + std::to_string(b));
    }
    if (options.labeling != nullptr) {
      parity ^= options.labeling->Flip(a, b);
    }
  }
  if (options.labeling != nullptr && parity == 0) {
    return Fail(VerifyError::kEvenParity, "generalized length is even");
  }
  return {};
}

bool ConnectedWithin(const Graph& g, const std::vector<Vertex>& set) {
  std::set<Vertex> members(set.begin(), set.end());
  std::set<Vertex> seen{set.front()};
  std::vector<Vertex> stack{set.front()};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (members.count(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == members.size();
}

VerifyResult VerifyMinor(const Graph& g, const MinorWitness& w) {
  const Pattern& h = w.pattern;
  if (w.branch_sets.size() != h.size() ||
      w.connecting_edges.size() != h.edges().size()) {
    return Fail(VerifyError::kShapeMismatch, "witness does not match pattern");
  }
  std::vector<int> owner(g.n() + 1, -1);
  for (std::size_t node = 0; node < h.size(); ++node) {
    const auto& set = w.branch_sets[node];
    if (set.empty()) {
      return Fail(VerifyError::kEmptyBranchSet, "node " + std::to_string(node));
    }
    for (Vertex v : set) {
      if (!InRange(g, v)) return Fail(VerifyError::kOutOfRange, std::to_string(v));
      if (owner[v] != -1) {
        return Fail(VerifyError::kOverlappingBranchSets, std::to_string(v));
      }
      owner[v] = static_cast<int>(node);
    }
    if (!ConnectedWithin(g, set)) {
      return Fail(VerifyError::kDisconnectedBranchSet,
                  "node " + std::to_string(node));
    }
  }
  for (std::size_t j = 0; j < h.edges().size(); ++j) {
    auto [a, b] = h.edges()[j];
    auto [x, y] = w.connecting_edges[j];
    if (!InRange(g, x) || !InRange(g, y)) {
      return Fail(VerifyError::kOutOfRange, "connecting edge");
    }
    bool forward = owner[x] == a && owner[y] == b;
    bool backward = owner[x] == b && owner[y] == a;
    if (!(forward || backward) || !g.HasEdge(x, y)) {
      return Fail(VerifyError::kBadConnectingEdge,
                  "pattern edge " + std::to_string(j));
    }
  }
  return {};
}

VerifyResult VerifyCut(const Graph& g, const SparseCut& c) {
  for (Vertex v : c.vertices) {
    if (!InRange(g, v)) return Fail(VerifyError::kOutOfRange, std::to_string(v));
  }
  std::set<Vertex> s(c.vertices.begin(), c.vertices.end());
  if (s.size() != c.vertices.size()) {
    return Fail(VerifyError::kRepeatedVertex, "cut set has duplicates");
  }
  if (s.empty()) return Fail(VerifyError::kEmptyBranchSet, "empty cut set");
  double cut = static_cast<double>(CutSize(g, c.vertices));
  double bound = c.zeta * static_cast<double>(s.size()) *
                 static_cast<double>(g.degree_bound());
  if (cut > bound + 1e-9) {
    return Fail(VerifyError::kCutNotSparse,
                "cut " + std::to_string(cut) + " > " + std::to_string(bound));
  }
  return {};
}

std::vector<std::uint32_t> ToU32(const std::vector<Vertex>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

const char* VerifyErrorName(VerifyError e) {
  switch (e) {
    case VerifyError::kOk: return "ok";
    case VerifyError::kOutOfRange: return "out_of_range";
    case VerifyError::kRepeatedVertex: return "repeated_vertex";
    case VerifyError::kMissingEdge: return "missing_edge";
    case VerifyError::kTooShort: return "too_short";
    case VerifyError::kEvenParity: return "even_parity";
    case VerifyError::kShapeMismatch: return "shape_mismatch";
    case VerifyError::kEmptyBranchSet: return "empty_branch_set";
    case VerifyError::kOverlappingBranchSets: return "overlapping_branch_sets";
    case VerifyError::kDisconnectedBranchSet: return "disconnected_branch_set";
    case VerifyError::kBadConnectingEdge: return "bad_connecting_edge";
    case VerifyError::kCutNotSparse: return "cut_not_sparse";
  }
  return "unknown";
}

VerifyResult VerifyCertificate(const Graph& g, const Certificate& cert,
                               const VerifyOptions& options) {
  if (const auto* c = std::get_if<SimpleCycle>(&cert)) {
    return VerifyCycle(g, *c, options);
  }
  if (const auto* w = std::get_if<MinorWitness>(&cert)) return VerifyMinor(g, *w);
  return VerifyCut(g, std::get<SparseCut>(cert));
}

std::size_t CutSize(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<bool> in(g.n() + 1, false);
  for (Vertex v : s) in[v] = true;
  std::size_t cut = 0;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.neighbors(v)) cut += in[w] ? 0 : 1;
  }
  return cut;
}

const char* CertificateKind(const Certificate& c) {
  if (std::holds_alternative<SimpleCycle>(c)) return "cycle";
  if (std::holds_alternative<MinorWitness>(c)) return "minor";
  return "cut";
}

std::size_t CertificateSize(const Certificate& c) {
  if (const auto* cyc = std::get_if<SimpleCycle>(&c)) return cyc->length();
  if (const auto* w = std::get_if<MinorWitness>(&c)) {
    std::size_t total = 0;
    for (const auto& b : w->branch_sets) total += b.size();
    return total;
  }
  return std::get<SparseCut>(c).vertices.size();
}

std::string CertificateToJson(const Certificate& c) {
  json j;
  if (const auto* cyc = std::get_if<SimpleCycle>(&c)) {
    j["kind"] = "cycle";
    j["vertices"] = ToU32(cyc->vertices);
  } else if (const auto* w = std::get_if<MinorWitness>(&c)) {
    j["kind"] = "minor";
    j["pattern"] = {{"name", w->pattern.name()},
                    {"nodes", w->pattern.size()},
                    {"edges", w->pattern.edges()}};
    json sets = json::array();
    for (const auto& b : w->branch_sets) sets.push_back(ToU32(b));
    j["branch_sets"] = sets;
    j["connecting_edges"] = w->connecting_edges;
  } else {
    const auto& cut = std::get<SparseCut>(c);
    j["kind"] = "cut";
    j["vertices"] = ToU32(cut.vertices);
    j["zeta"] = cut.zeta;
  }
  return j.dump();
}

Certificate CertificateFromJson(const std::string& text) {
  try {
    json j = json::parse(text);
    std::string kind = j.at("kind");
    if (kind == "cycle") {
      return SimpleCycle{j.at("vertices").get<std::vector<Vertex>>()};
    }
    if (kind == "minor") {
      const json& p = j.at("pattern");
      Pattern pattern(p.at("nodes").get<std::size_t>(),
                      p.at("edges").get<std::vector<std::pair<int, int>>>(),
                      p.value("name", std::string()));
      MinorWitness w{pattern,
                     j.at("branch_sets").get<std::vector<std::vector<Vertex>>>(),
                     j.at("connecting_edges")
                         .get<std::vector<std::pair<Vertex, Vertex>>>()};
      return w;
    }
    if (kind == "cut") {
      return SparseCut{j.at("vertices").get<std::vector<Vertex>>(),
                       j.at("zeta").get<double>()};
    }
    throw FormatError("unknown certificate kind: " + kind);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad certificate json: ") + e.what());
  }
}

}  // namespace minorprop

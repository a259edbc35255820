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

#ifndef MINORPROP_CERTIFICATE_H_
#define MINORPROP_CERTIFICATE_H_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minorprop/graph.h"
#include "minorprop/labeling.h"
#include "minorprop/pattern.h"

namespace minorprop {

// A cycle v0 v1 ... v_{m-1} (closing edge v_{m-1} v0). Vertices distinct.
struct SimpleCycle {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
};

// A minor model of `pattern`: branch_sets[h] is the set for node h and
// connecting_edges[j] is a graph edge realizing pattern.edges()[j], with
// first endpoint in the set of the edge's first node.
struct MinorWitness {
  Pattern pattern;
  std::vector<std::vector<Vertex>> branch_sets;
  std::vector<std::pair<Vertex, Vertex>> connecting_edges;
};

// A vertex set S whose cut has at most zeta * |S| * d edges.
struct SparseCut {
  std::vector<Vertex> vertices;
  double zeta = 0;
};

using Certificate = std::variant<SimpleCycle, MinorWitness, SparseCut>;

// Tester output. A rejection always carries a certificate.
struct Verdict {
  bool reject = false;
  std::optional<Certificate> certificate;
  // The vertex sampler failed on every retry; the run accepted.
  bool sampling_failed = false;
  // An exploration cap or exact-check limit was hit; the run accepted.
  bool truncated = false;
  // The walker ran its exact small-instance path.
  bool exhaustive = false;
  // A cycle in a reduced graph could not be mapped back; the run accepted.
  bool lift_failed = false;

  static Verdict Accept() { return Verdict{}; }
  static Verdict Reject(Certificate c) {
    Verdict v;
    v.reject = true;
    v.certificate = std::move(c);
    return v;
  }
};

enum class VerifyError {
  kOk,
  kOutOfRange,
  kRepeatedVertex,
  kMissingEdge,
  kTooShort,
  kEvenParity,
  kShapeMismatch,
  kEmptyBranchSet,
  kOverlappingBranchSets,
  kDisconnectedBranchSet,
  kBadConnectingEdge,
  kCutNotSparse,
};

const char* VerifyErrorName(VerifyError e);

struct VerifyOptions {
  // When set, a SimpleCycle must have odd generalized length.
  const EdgeLabeling* labeling = nullptr;
  std::size_t min_cycle_length = 3;
};

struct VerifyResult {
  VerifyError error = VerifyError::kOk;
  std::string detail;
  bool ok() const { return error == VerifyError::kOk; }
};

// Checks a certificate against the full graph. Never trusts the producer.
VerifyResult VerifyCertificate(const Graph& g, const Certificate& cert,
                               const VerifyOptions& options = {});

// Edges leaving S (S given as a vertex list; duplicates ignored).
std::size_t CutSize(const Graph& g, const std::vector<Vertex>& s);

const char* CertificateKind(const Certificate& c);
// Number of vertices the certificate names.
std::size_t CertificateSize(const Certificate& c);

// JSON round trip with a "kind" tag.
std::string CertificateToJson(const Certificate& c);
Certificate CertificateFromJson(const std::string& text);

}  // namespace minorprop

#endif  // MINORPROP_CERTIFICATE_H_

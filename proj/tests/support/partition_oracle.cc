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

#include "support/partition_oracle.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace minorprop::testing {
namespace {

bool ConnectedMask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t reach = mask & (~mask + 1);
  while (true) {
    std::uint32_t grow = reach;
    for (std::uint32_t r = reach; r; r &= r - 1) grow |= adj[__builtin_ctz(r)] & mask;
    if (grow == reach) break;
    reach = grow;
  }
  return reach == mask;
}

}  // namespace

bool PartitionHasMinor(const Graph& g, const Pattern& h) {
  const std::size_t n = g.n(), k = h.size();
  if (n > 10) throw std::invalid_argument("partition oracle limited to 10 vertices");
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.neighbors(v)) adj[v - 1] |= 1u << (w - 1);
  }
  std::vector<int> label(n, -1);
  std::vector<std::uint32_t> cls(k, 0);
  // Odometer over labels in {-1, 0..k-1}.
  while (true) {
    std::fill(cls.begin(), cls.end(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (label[v] >= 0) cls[label[v]] |= 1u << v;
    }
    bool ok = true;
    for (std::size_t c = 0; ok && c < k; ++c) ok = ConnectedMask(adj, cls[c]);
    for (std::size_t e = 0; ok && e < h.edges().size(); ++e) {
      auto [a, b] = h.edges()[e];
      std::uint32_t touch = 0;
      for (std::uint32_t r = cls[a]; r; r &= r - 1) touch |= adj[__builtin_ctz(r)];
      ok = (touch & cls[b]) != 0;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && label[i] == static_cast<int>(k) - 1) label[i++] = -1;
    if (i == n) return false;
    ++label[i];
  }
}

bool HasLongCycleBrute(const Graph& g, std::size_t k) {
  const std::size_t n = g.n();
  if (n > 9) throw std::invalid_argument("brute cycle oracle limited to 9 vertices");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size < std::max<std::size_t>(k, 3)) continue;
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) vs.push_back(static_cast<Vertex>(v + 1));
    }
    // Fix the first vertex; permute the rest.
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i < vs.size(); ++i) {
        ok = g.HasEdge(vs[i], vs[(i + 1) % vs.size()]);
      }
      if (ok) return true;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return false;
}

}  // namespace minorprop::testing

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

#include "minorprop/witness.h"

#include <algorithm>
#include <string>

#include "minorprop/errors.h"

namespace minorprop {

MinorWitness CompleteWitness(const Graph& g, const Pattern& h,
                             std::vector<std::vector<Vertex>> sets) {
  std::vector<int> owner(g.n() + 1, -1);
  for (std::size_t node = 0; node < sets.size(); ++node) {
    for (Vertex v : sets[node]) owner[v] = static_cast<int>(node);
  }
  MinorWitness w{h, std::move(sets), {}};
  for (auto [a, b] : h.edges()) {
    bool hit = false;
    for (Vertex x : w.branch_sets[a]) {
      for (Vertex y : g.neighbors(x)) {
        if (owner[y] == b) {
          w.connecting_edges.emplace_back(x, y);
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) {
      throw InternalError("no graph edge realizes pattern edge " +
                          std::to_string(a) + "-" + std::to_string(b));
    }
  }
  return w;
}

MinorWitness MapWitness(const MinorWitness& w,
                        const std::vector<Vertex>& to_global) {
  MinorWitness out{w.pattern, {}, {}};
  for (const auto& set : w.branch_sets) {
    std::vector<Vertex> mapped;
    for (Vertex x : set) mapped.push_back(to_global[x]);
    out.branch_sets.push_back(std::move(mapped));
  }
  for (auto [x, y] : w.connecting_edges) {
    out.connecting_edges.emplace_back(to_global[x], to_global[y]);
  }
  return out;
}

MinorWitness UnionWitness(const std::vector<MinorWitness>& parts) {
  std::vector<std::pair<int, int>> edges;
  std::size_t offset = 0;
  std::string name;
  MinorWitness out;
  for (const auto& p : parts) {
    for (auto [a, b] : p.pattern.edges()) {
      edges.emplace_back(a + static_cast<int>(offset), b + static_cast<int>(offset));
    }
    offset += p.pattern.size();
    name += (name.empty() ? "" : "+") + p.pattern.name();
    out.branch_sets.insert(out.branch_sets.end(), p.branch_sets.begin(),
                           p.branch_sets.end());
    out.connecting_edges.insert(out.connecting_edges.end(),
                                p.connecting_edges.begin(),
                                p.connecting_edges.end());
  }
  out.pattern = Pattern(offset, edges, name);
  return out;
}

MinorWitness CycleWitness(const Graph& g, const SimpleCycle& cycle,
                          std::size_t k) {
  if (cycle.length() < k) throw PreconditionError("cycle shorter than k");
  std::vector<std::vector<Vertex>> sets(k);
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    sets[std::min(i, k - 1)].push_back(cycle.vertices[i]);
  }
  return CompleteWitness(g, Pattern::Cycle(k), std::move(sets));
}

MinorWitness PathWitness(const Graph& g, const std::vector<Vertex>& path) {
  std::vector<std::vector<Vertex>> sets;
  for (Vertex v : path) sets.push_back({v});
  return CompleteWitness(g, Pattern::Path(path.size() - 1), std::move(sets));
}

}  // namespace minorprop

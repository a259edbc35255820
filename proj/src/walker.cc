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

#include "minorprop/walker.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "minorprop/errors.h"

namespace minorprop {
namespace {

std::size_t CeilPositive(double x) {
  if (!(x < 1e18)) return std::numeric_limits<std::size_t>::max() / 4;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(x)));
}

// Saturating product, so absurd schedules compare as "too large".
std::size_t SatMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

struct Visit {
  std::int64_t walk = -1;
  std::size_t step = 0;
};

}  // namespace

WalkerParams ScheduleWalker(std::size_t n, std::size_t d, double eps,
                            const WalkerConfig& config) {
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must be in (0,1]");
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  const double lg = std::log2(nn);
  WalkerParams p;
  p.length = config.length.value_or(
      CeilPositive(config.c_L * lg / (eps * eps * eps)));
  p.walks = config.walks.value_or(
      CeilPositive(config.c_K * std::sqrt(nn) * lg / (eps * eps)));
  p.starts = config.starts.value_or(CeilPositive(config.c_T / eps));
  p.exhaustive =
      config.allow_exhaustive &&
      SatMul(SatMul(p.starts, p.walks), p.length) >= SatMul(n, d);
  return p;
}

std::vector<VertexId> ExtractOddCycle(const WalkRecord& a, std::size_t ia,
                                      const WalkRecord& b, std::size_t ib) {
  if (ia >= a.steps.size() || ib >= b.steps.size() || a.steps.empty() ||
      b.steps.empty()) {
    throw MalformedWalk("walk index out of range");
  }
  if (a.start != b.start || a.steps[0].first != a.start ||
      b.steps[0].first != b.start) {
    throw MalformedWalk("walks do not share a start");
  }
  if (a.steps[ia].first != b.steps[ib].first) {
    throw MalformedWalk("walk prefixes end at different vertices");
  }
  const int pa = a.steps[ia].second & 1;
  const int pb = b.steps[ib].second & 1;
  if (pa == pb) throw MalformedWalk("prefixes reach the vertex with equal parity");

  // Closed walk a[0..ia], b[ib-1..0] with running parities; loops are cut
  // out as soon as a vertex repeats. Even loops are dropped (parity is
  // unchanged), the first odd loop is a simple odd cycle.
  std::vector<VertexId> stack;
  std::vector<int> parity;
  std::unordered_map<VertexId, std::size_t> where;
  auto visit = [&](VertexId v, int p) -> std::optional<std::vector<VertexId>> {
    auto it = where.find(v);
    if (it == where.end()) {
      where.emplace(v, stack.size());
      stack.push_back(v);
      parity.push_back(p);
      return std::nullopt;
    }
    const std::size_t j = it->second;
    if (((p ^ parity[j]) & 1) != 0) {
      return std::vector<VertexId>(stack.begin() + j, stack.end());
    }
    while (stack.size() > j + 1) {
      where.erase(stack.back());
      stack.pop_back();
      parity.pop_back();
    }
    return std::nullopt;
  };
  for (std::size_t j = 0; j <= ia; ++j) {
    if (auto c = visit(a.steps[j].first, a.steps[j].second & 1)) return *c;
  }
  for (std::size_t j = ib; j-- > 0;) {
    int p = (pa ^ pb ^ b.steps[j].second) & 1;
    if (auto c = visit(b.steps[j].first, p)) return *c;
  }
  throw InternalError("odd closed walk without an odd loop");
}

std::optional<std::vector<VertexId>> ExhaustiveOddCycle(GraphView& view) {
  struct Label {
    int color;
    VertexId parent;
    std::size_t depth;
  };
  std::unordered_map<VertexId, Label> label;
  for (VertexId root : view.Roots()) {
    if (label.contains(root)) continue;
    label.emplace(root, Label{0, 0, 0});
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      const Label lx = label.at(x);
      for (VertexId y : ViewNeighbors(view, x)) {
        const int want = lx.color ^ view.Flip(x, y);
        auto it = label.find(y);
        if (it == label.end()) {
          label.emplace(y, Label{want, x, lx.depth + 1});
          queue.push_back(y);
          continue;
        }
        if (it->second.color == want) continue;
        // Tree paths to the common ancestor plus the edge {x, y}.
        std::vector<VertexId> up_x{x}, up_y{y};
        while (label.at(up_x.back()).depth > label.at(up_y.back()).depth) {
          up_x.push_back(label.at(up_x.back()).parent);
        }
        while (label.at(up_y.back()).depth > label.at(up_x.back()).depth) {
          up_y.push_back(label.at(up_y.back()).parent);
        }
        while (up_x.back() != up_y.back()) {
          up_x.push_back(label.at(up_x.back()).parent);
          up_y.push_back(label.at(up_y.back()).parent);
        }
        up_y.pop_back();
        up_x.insert(up_x.end(), up_y.rbegin(), up_y.rend());
        return up_x;
      }
    }
  }
  return std::nullopt;
}

WalkOutcome WalkTest(GraphView& view, double eps, const WalkerConfig& config,
                     Rng& rng) {
  WalkOutcome out;
  const std::size_t d = view.degree_bound();
  out.params = ScheduleWalker(view.vertex_count_estimate(), d, eps, config);
  if (out.params.exhaustive) {
    out.odd_cycle = ExhaustiveOddCycle(view);
    return out;
  }
  if (d == 0) return out;
  std::vector<WalkRecord> walks;
  std::unordered_map<VertexId, std::array<Visit, 2>> seen;
  for (std::size_t t = 0; t < out.params.starts; ++t) {
    std::optional<VertexId> start;
    for (std::size_t a = 0; a < view.sample_attempts() && !start; ++a) {
      start = view.TrySample(rng);
    }
    if (!start) {
      out.sampling_failed = true;
      continue;
    }
    walks.clear();
    seen.clear();
    seen[*start][0] = Visit{0, 0};
    for (std::size_t k = 0; k < out.params.walks; ++k) {
      walks.push_back(WalkRecord{*start, {{*start, 0}}});
      WalkRecord& w = walks.back();
      const auto self = static_cast<std::int64_t>(k);
      VertexId cur = *start;
      int p = 0;
      for (std::size_t step = 0; step < out.params.length; ++step) {
        VertexId next = view.Neighbor(cur, rng.Uniform(1, d));
        if (next == 0) continue;  // lazy step
        p ^= view.Flip(cur, next);
        cur = next;
        w.steps.emplace_back(cur, p);
        auto& slot = seen[cur];
        const Visit& other = slot[p ^ 1];
        if (other.walk >= 0) {
          out.odd_cycle =
              ExtractOddCycle(walks[static_cast<std::size_t>(other.walk)],
                              other.step, w, w.steps.size() - 1);
          return out;
        }
        if (slot[p].walk < 0) slot[p] = Visit{self, w.steps.size() - 1};
      }
    }
  }
  return out;
}

Verdict Test2Colorable(QueryOracle& oracle, double eps,
                       const EdgeLabeling* labeling,
                       const WalkerConfig& config, std::uint64_t seed) {
  OracleView view(oracle, labeling);
  Rng rng(seed);
  WalkOutcome w = WalkTest(view, eps, config, rng);
  Verdict v;
  if (w.odd_cycle) {
    SimpleCycle c;
    for (VertexId x : *w.odd_cycle) c.vertices.push_back(static_cast<Vertex>(x));
    v = Verdict::Reject(std::move(c));
  }
  v.sampling_failed = w.sampling_failed;
  v.exhaustive = w.params.exhaustive;
  return v;
}

}  // namespace minorprop

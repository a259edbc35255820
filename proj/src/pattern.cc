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

#include "minorprop/pattern.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "minorprop/errors.h"

namespace minorprop {

Pattern::Pattern(std::size_t k, std::vector<std::pair<int, int>> edges,
                 std::string name)
    : adj_(k), name_(std::move(name)) {
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(k) ||
        b >= static_cast<int>(k) || a == b) {
      throw PreconditionError("bad pattern edge");
    }
    if (a > b) std::swap(a, b);
    if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) {
      throw PreconditionError("parallel pattern edge");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    edges_.emplace_back(a, b);
  }
}

Pattern Pattern::Path(std::size_t edges) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < edges; ++i) {
    e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  }
  return Pattern(edges + 1, e, "P" + std::to_string(edges));
}

Pattern Pattern::Star(std::size_t leaves) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<int>(i));
  return Pattern(leaves + 1, e, "K1," + std::to_string(leaves));
}

Pattern Pattern::Cycle(std::size_t k) {
  if (k < 3) throw PreconditionError("cycle pattern needs k >= 3");
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < k; ++i) {
    e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % k));
  }
  return Pattern(k, e, "C" + std::to_string(k));
}

Pattern Pattern::TrianglePlusEdge() {
  return Pattern(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}, "triangle+edge");
}

Pattern Pattern::Complete(std::size_t k) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Pattern(k, e, "K" + std::to_string(k));
}

Pattern Pattern::FromTree(const RootedTree& tree) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    int p = tree.parent(static_cast<int>(v));
    if (p >= 0) e.emplace_back(p, static_cast<int>(v));
  }
  return Pattern(tree.size(), e, "tree" + std::to_string(tree.size()));
}

Pattern Pattern::Parse(const std::string& spec) {
  auto number = [&](std::size_t from) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(spec.substr(from), &pos);
    } catch (const std::exception&) {
      throw PreconditionError("unknown pattern: " + spec);
    }
    if (from + pos != spec.size() || value < 0) {
      throw PreconditionError("unknown pattern: " + spec);
    }
    return static_cast<std::size_t>(value);
  };
  if (spec == "triangle+edge") return TrianglePlusEdge();
  if (spec.rfind("spider:", 0) == 0) {
    std::vector<std::size_t> legs;
    std::size_t from = 7;
    while (from <= spec.size()) {
      std::size_t comma = spec.find(',', from);
      if (comma == std::string::npos) comma = spec.size();
      std::string leg = spec.substr(from, comma - from);
      if (leg.empty() || leg.size() > 6 ||
          leg.find_first_not_of("0123456789") != std::string::npos) {
        throw PreconditionError("unknown pattern: " + spec);
      }
      legs.push_back(std::stoul(leg));
      from = comma + 1;
    }
    Pattern p = FromTree(RootedTree::Spider(legs));
    p.name_ = spec;
    return p;
  }
  if (spec.rfind("K1,", 0) == 0) return Star(number(3));
  if (spec.rfind("P", 0) == 0) return Path(number(1));
  if (spec.rfind("C", 0) == 0) return Cycle(number(1));
  if (spec.rfind("K", 0) == 0) return Complete(number(1));
  throw PreconditionError("unknown pattern: " + spec);
}

bool Pattern::IsConnected() const { return Components().size() <= 1; }

bool Pattern::IsForest() const {
  return edges_.size() + Components().size() == size();
}

std::size_t Pattern::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

std::vector<std::vector<int>> Pattern::Components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : adj_[comp[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Pattern Pattern::Induced(const std::vector<int>& nodes) const {
  std::vector<int> index(size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : edges_) {
    if (index[a] >= 0 && index[b] >= 0) e.emplace_back(index[a], index[b]);
  }
  return Pattern(nodes.size(), e, name_);
}

Pattern::Shape Pattern::shape() const {
  if (size() < 2 || !IsConnected()) return Shape::kOther;
  std::size_t maxd = max_degree();
  if (IsForest()) {
    if (maxd <= 2) return Shape::kPath;
    if (maxd == size() - 1) return Shape::kStar;
    return Shape::kOther;
  }
  if (size() >= 3 && edges_.size() == size() && maxd == 2) return Shape::kCycle;
  return Shape::kOther;
}

std::size_t Pattern::shape_parameter() const {
  switch (shape()) {
    case Shape::kPath:
      return size() - 1;
    case Shape::kStar:
      return size() - 1;
    case Shape::kCycle:
      return size();
    case Shape::kOther:
      break;
  }
  return 0;
}

RootedTree::RootedTree(int root, std::vector<int> parent)
    : root_(root), parent_(std::move(parent)), children_(parent_.size()) {
  const int k = static_cast<int>(parent_.size());
  if (k == 0 || root < 0 || root >= k || parent_[root] != -1) {
    throw PreconditionError("bad tree root");
  }
  for (int v = 0; v < k; ++v) {
    if (v == root) continue;
    if (parent_[v] < 0 || parent_[v] >= k || parent_[v] == v) {
      throw PreconditionError("bad tree parent");
    }
    children_[parent_[v]].push_back(v);
  }
  // Every node must reach the root without revisiting.
  for (int v = 0; v < k; ++v) {
    int x = v;
    for (int steps = 0; x != root; ++steps) {
      if (steps > k) throw PreconditionError("parent array has a cycle");
      x = parent_[x];
    }
  }
}

RootedTree RootedTree::Path(std::size_t edges) {
  std::vector<int> p(edges + 1);
  p[0] = -1;
  for (std::size_t i = 1; i <= edges; ++i) p[i] = static_cast<int>(i - 1);
  return RootedTree(0, p);
}

RootedTree RootedTree::Star(std::size_t leaves) {
  std::vector<int> p(leaves + 1, 0);
  p[0] = -1;
  return RootedTree(0, p);
}

RootedTree RootedTree::Spider(const std::vector<std::size_t>& legs) {
  std::vector<int> p{-1};
  for (std::size_t len : legs) {
    if (len == 0) throw PreconditionError("spider legs must be >= 1");
    int prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      p.push_back(prev);
      prev = static_cast<int>(p.size()) - 1;
    }
  }
  return RootedTree(0, p);
}

RootedTree RootedTree::FromPattern(const Pattern& tree, int root) {
  if (!tree.IsTree()) throw PreconditionError("pattern is not a tree");
  std::vector<int> p(tree.size(), -2);
  p[root] = -1;
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int w : tree.neighbors(queue[i])) {
      if (p[w] == -2) {
        p[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  return RootedTree(root, p);
}

std::size_t RootedTree::SubtreeSize(int node) const {
  return SubtreeNodes(node).size();
}

std::vector<int> RootedTree::SubtreeNodes(int node) const {
  std::vector<int> out{node};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int c : children_[out[i]]) out.push_back(c);
  }
  return out;
}

RootedTree::Split RootedTree::SplitAt(int child) const {
  if (child < 0 || child >= static_cast<int>(size()) || parent_[child] != root_) {
    throw PreconditionError("split node must be a child of the root");
  }
  auto build = [&](int top, const std::vector<bool>& keep,
                   std::vector<int>& nodes) {
    nodes.clear();
    std::vector<int> stack{top};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      nodes.push_back(x);
      const auto& ch = children_[x];
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
        if (keep[*it]) stack.push_back(*it);
      }
    }
    std::vector<int> index(size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = static_cast<int>(i);
    std::vector<int> p(nodes.size(), -1);
    for (std::size_t i = 1; i < nodes.size(); ++i) p[i] = index[parent_[nodes[i]]];
    return RootedTree(0, p);
  };
  std::vector<bool> in_lower(size(), false);
  for (int x : SubtreeNodes(child)) in_lower[x] = true;
  std::vector<bool> in_upper(size());
  for (std::size_t i = 0; i < size(); ++i) in_upper[i] = !in_lower[i];
  Split s;
  s.upper = build(root_, in_upper, s.upper_nodes);
  s.lower = build(child, in_lower, s.lower_nodes);
  return s;
}

RootedTree ReadRootedTree(std::istream& in) {
  long long k = 0, root = 0;
  if (!(in >> k >> root) || k < 1 || root < 1 || root > k) {
    throw FormatError("bad rooted tree header");
  }
  std::vector<int> p(static_cast<std::size_t>(k), -2);
  p[root - 1] = -1;
  for (long long i = 0; i + 1 < k; ++i) {
    long long c = 0, q = 0;
    if (!(in >> c >> q) || c < 1 || c > k || q < 1 || q > k) {
      throw FormatError("bad rooted tree edge line");
    }
    if (p[c - 1] != -2) throw FormatError("node given two parents");
    p[c - 1] = static_cast<int>(q - 1);
  }
  try {
    return RootedTree(static_cast<int>(root - 1), p);
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

RootedTree ReadRootedTreeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return ReadRootedTree(in);
}

void WriteRootedTree(std::ostream& out, const RootedTree& t) {
  out << t.size() << ' ' << t.root() + 1 << '\n';
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (static_cast<int>(v) == t.root()) continue;
    out << v + 1 << ' ' << t.parent(static_cast<int>(v)) + 1 << '\n';
  }
}

}  // namespace minorprop

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

#ifndef MINORPROP_PATTERN_H_
#define MINORPROP_PATTERN_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace minorprop {

class RootedTree;

// A small simple graph H whose minors we look for. Nodes are 0..k-1.
class Pattern {
 public:
  enum class Shape { kPath, kStar, kCycle, kOther };

  Pattern() = default;
  // Throws PreconditionError on self-loops, parallel edges or bad ids.
  Pattern(std::size_t k, std::vector<std::pair<int, int>> edges,
          std::string name = "");

  // Path with `edges` edges (edges + 1 nodes).
  static Pattern Path(std::size_t edges);
  // K_{1,leaves}; node 0 is the center.
  static Pattern Star(std::size_t leaves);
  static Pattern Cycle(std::size_t k);
  // Triangle 0-1-2 with pendant node 3 attached to 0.
  static Pattern TrianglePlusEdge();
  static Pattern Complete(std::size_t k);
  static Pattern FromTree(const RootedTree& tree);
  // "P3", "K1,3", "C4", "K4", "triangle+edge", "spider:2,1,1" (leg
  // lengths); anything else is an error.
  static Pattern Parse(const std::string& spec);

  std::size_t size() const { return adj_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int h) const { return adj_[h]; }
  const std::string& name() const { return name_; }

  bool IsConnected() const;
  bool IsForest() const;
  bool IsTree() const { return IsConnected() && IsForest(); }
  std::size_t max_degree() const;
  // Node sets of the connected components, by least node.
  std::vector<std::vector<int>> Components() const;
  // Sub-pattern induced on `nodes`, renumbered in the given order.
  Pattern Induced(const std::vector<int>& nodes) const;
  // Structural shape; a 2-node path counts as kPath.
  Shape shape() const;
  // Length parameter of the shape: edges for paths, leaves for stars,
  // length for cycles.
  std::size_t shape_parameter() const;

  bool operator==(const Pattern& other) const {
    return adj_.size() == other.adj_.size() && edges_ == other.edges_;
  }

 private:
  std::vector<std::pair<int, int>> edges_;  // each with first < second
  std::vector<std::vector<int>> adj_;
  std::string name_;
};

// A rooted tree on nodes 0..k-1. parent(root) == -1.
class RootedTree {
 public:
  RootedTree() = default;
  // Throws PreconditionError unless `parent` describes a tree rooted at
  // `root`.
  RootedTree(int root, std::vector<int> parent);

  static RootedTree Singleton() { return RootedTree(0, {-1}); }
  // Path of `edges` edges rooted at one end.
  static RootedTree Path(std::size_t edges);
  // Star with `leaves` leaves rooted at the center.
  static RootedTree Star(std::size_t leaves);
  // Spider: center 0 with one leg per entry of `legs` (leg lengths >= 1).
  static RootedTree Spider(const std::vector<std::size_t>& legs);
  // Rooted copy of a tree pattern.
  static RootedTree FromPattern(const Pattern& tree, int root);

  std::size_t size() const { return parent_.size(); }
  int root() const { return root_; }
  int parent(int node) const { return parent_[node]; }
  const std::vector<int>& children(int node) const { return children_[node]; }
  std::size_t SubtreeSize(int node) const;
  std::vector<int> SubtreeNodes(int node) const;

  // Splits off the subtree below the root-child `child`.
  struct Split;
  Split SplitAt(int child) const;

 private:
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

// (T minus subtree(child), subtree(child)), rooted at the old root and at
// `child`, nodes renumbered in preorder. The node vectors give the original
// node of each new node.
struct RootedTree::Split {
  RootedTree upper;
  std::vector<int> upper_nodes;
  RootedTree lower;
  std::vector<int> lower_nodes;
};

// RootedTree text format: "k root" then k-1 lines "child parent", nodes
// numbered 1..k in the file.
RootedTree ReadRootedTree(std::istream& in);
RootedTree ReadRootedTreeFile(const std::string& path);
void WriteRootedTree(std::ostream& out, const RootedTree& t);

}  // namespace minorprop

#endif  // MINORPROP_PATTERN_H_

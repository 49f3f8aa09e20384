#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mayer {

/// Undirected f-bond between two particles (0-based node indices, u < v).
struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Labeled Mayer diagram. Nodes are 0-based internally; the text literal
/// `order:4;edges:1-2,2-3` is 1-based.
class ClusterGraph {
 public:
  ClusterGraph() = default;
  /// Throws InvalidArgument on self-loops, duplicates or out-of-range nodes.
  ClusterGraph(int order, std::vector<Edge> edges);

  static ClusterGraph parse(const std::string& literal);
  static ClusterGraph complete(int order);
  static ClusterGraph ring(int order);

  int order() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  /// Index of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> degrees() const;

  /// Edge labels A, B, C, ... in edge order.
  std::string label(int edge_index) const;
  std::string to_string() const;

  int component_count() const;
  bool connected() const { return component_count() == 1; }
  /// No articulation point and at least one edge (the single bond counts).
  bool biconnected() const;
  int cyclomatic_number() const { return edge_count() - order_ + component_count(); }

  bool operator==(const ClusterGraph&) const = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
};

struct StarGraph {
  ClusterGraph graph;
  std::int64_t labeled_count = 0;
};

/// All star (biconnected) diagrams on `order` nodes, one representative per
/// isomorphism class with its number of labeled copies. Sorted by edge count,
/// then by canonical form. Orders 2..6.
std::vector<StarGraph> enumerate_stars(int order);

/// One term of the boundary expansion of D_1 ∩ ... ∩ D_k: particles in
/// `surface_set` contribute their boundary Σ, the rest their domain D.
/// Indices are 1-based particle labels.
struct VertexTerm {
  std::vector<int> surface_set;
  std::vector<int> domain_set;

  /// e.g. "∂D1∩D2".
  std::string to_string() const;
  bool operator==(const VertexTerm&) const = default;
};

/// Expansion of ∂(D_1 ∩ ... ∩ D_k) in n dimensions. Terms with more than n
/// boundaries vanish and are dropped. Ordered by boundary count, then
/// lexicographically.
std::vector<VertexTerm> boundary_expand(int k, int n);

/// "T1 + T2 + ..." rendering of a boundary expansion.
std::string boundary_formula(const std::vector<VertexTerm>& terms);

/// Degree multiset, largest first: each node is a k-vertex with k bonds.
std::vector<int> vertex_split(const ClusterGraph& g);

/// A closed walk through the graph. `nodes` lists the walk without repeating
/// the start; `edges` holds edge indices in walk order, edges[i] joining
/// nodes[i] and nodes[(i + 1) % size].
struct Loop {
  std::vector<int> nodes;
  std::vector<int> edges;
};

struct CycleBasis {
  std::vector<Loop> loops;
};

/// Fundamental cycle basis of a BFS spanning tree rooted at node 0; one loop
/// per non-tree edge, in edge order.
CycleBasis cycle_basis(const ClusterGraph& g);

struct TreeEdge {
  int parent = 0;
  int child = 0;
  int edge = 0;  // index into ClusterGraph::edges()
};

/// BFS spanning tree rooted at node 0 (the tree used by cycle_basis), in
/// BFS order. Throws InvalidArgument for disconnected graphs.
std::vector<TreeEdge> spanning_tree(const ClusterGraph& g);

/// Number of node permutations preserving the edge set. Order <= 8.
std::int64_t automorphism_order(const ClusterGraph& g);

}  // namespace mayer

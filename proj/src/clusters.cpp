#include "mayerkit/clusters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "mayerkit/errors.hpp"

namespace mayer {

namespace {

using Mask = std::uint32_t;

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

// Connectivity of the nodes in `alive` using only edges in `mask`.
bool connected_subset(const std::vector<Edge>& pairs, Mask mask, int n, unsigned alive) {
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (alive & (1u << i)) {
      start = i;
      break;
    }
  }
  if (start < 0) return true;
  unsigned seen = 1u << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!(mask & (Mask{1} << e))) continue;
      const unsigned bu = 1u << pairs[e].u;
      const unsigned bv = 1u << pairs[e].v;
      if (!(alive & bu) || !(alive & bv)) continue;
      if (((seen & bu) != 0) != ((seen & bv) != 0)) {
        seen |= bu | bv;
        grew = true;
      }
    }
  }
  return seen == alive;
}

bool biconnected_mask(const std::vector<Edge>& pairs, Mask mask, int n) {
  if (mask == 0) return false;
  const unsigned all = (1u << n) - 1;
  if (!connected_subset(pairs, mask, n, all)) return false;
  for (int i = 0; i < n; ++i) {
    if (!connected_subset(pairs, mask, n, all & ~(1u << i))) return false;
  }
  return true;
}

}  // namespace

ClusterGraph::ClusterGraph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ < 2) throw InvalidArgument("cluster graphs need at least two nodes");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InvalidArgument("self-loop on node " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v < 0 || e.u >= order_ || e.v >= order_) {
      throw InvalidArgument("edge node outside [1, " + std::to_string(order_) + "]");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[i] == edges_[j]) {
        throw InvalidArgument("duplicate edge " + std::to_string(edges_[i].u + 1) + "-" +
                              std::to_string(edges_[i].v + 1));
      }
    }
  }
}

ClusterGraph ClusterGraph::parse(const std::string& literal) {
  const std::string order_key = "order:";
  const std::string edges_key = ";edges:";
  if (literal.rfind(order_key, 0) != 0) throw ParseError("graph literal must start with 'order:'", 0);
  const std::size_t sep = literal.find(';');
  if (sep == std::string::npos || literal.compare(sep, edges_key.size(), edges_key) != 0) {
    throw ParseError("expected ';edges:' after the order", sep == std::string::npos ? literal.size() : sep);
  }

  auto parse_int = [&](std::size_t begin, std::size_t end) {
    if (begin == end) throw ParseError("expected an integer", begin);
    int value = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const char c = literal[i];
      if (c < '0' || c > '9') throw ParseError(std::string("unexpected character '") + c + "'", i);
      value = value * 10 + (c - '0');
      if (value > 1000) throw ParseError("integer too large", begin);
    }
    return value;
  };

  const int order = parse_int(order_key.size(), sep);
  if (order < 2) throw ParseError("order must be at least 2", order_key.size());

  std::vector<Edge> edges;
  std::size_t pos = sep + edges_key.size();
  while (pos < literal.size()) {
    std::size_t end = literal.find(',', pos);
    if (end == std::string::npos) end = literal.size();
    const std::size_t dash = literal.find('-', pos);
    if (dash == std::string::npos || dash >= end) throw ParseError("edge must look like 'u-v'", pos);
    const int u = parse_int(pos, dash);
    const int v = parse_int(dash + 1, end);
    if (u < 1 || u > order) throw ParseError("node " + std::to_string(u) + " out of range", pos);
    if (v < 1 || v > order) throw ParseError("node " + std::to_string(v) + " out of range", dash + 1);
    if (u == v) throw ParseError("self-loop", pos);
    Edge e{std::min(u, v) - 1, std::max(u, v) - 1};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError("duplicate edge", pos);
    edges.push_back(e);
    pos = end + 1;
    if (end + 1 == literal.size()) throw ParseError("trailing comma", end);
  }
  return ClusterGraph(order, std::move(edges));
}

ClusterGraph ClusterGraph::complete(int order) { return ClusterGraph(order, all_pairs(order)); }

ClusterGraph ClusterGraph::ring(int order) {
  if (order < 3) return ClusterGraph(2, {{0, 1}});
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i) edges.push_back({i, (i + 1) % order});
  return ClusterGraph(order, std::move(edges));
}

bool ClusterGraph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int ClusterGraph::edge_index(int u, int v) const {
  const Edge e{std::min(u, v), std::max(u, v)};
  const auto it = std::find(edges_.begin(), edges_.end(), e);
  return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<int>> ClusterGraph::adjacency() const {
  std::vector<std::vector<int>> adj(order_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<int> ClusterGraph::degrees() const {
  std::vector<int> deg(order_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::string ClusterGraph::label(int edge_index) const {
  std::string out;
  int i = edge_index;
  do {
    out.insert(out.begin(), static_cast<char>('A' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return out;
}

std::string ClusterGraph::to_string() const {
  std::ostringstream os;
  os << "order:" << order_ << ";edges:";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ',';
    os << edges_[i].u + 1 << '-' << edges_[i].v + 1;
  }
  return os.str();
}

int ClusterGraph::component_count() const {
  std::vector<int> parent(order_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = order_;
  for (const auto& e : edges_) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool ClusterGraph::biconnected() const {
  if (edges_.empty() || !connected()) return false;
  // Articulation points by Tarjan's low-link DFS.
  const auto adj = adjacency();
  std::vector<int> disc(order_, -1);
  std::vector<int> low(order_, 0);
  int timer = 0;
  bool articulation = false;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      self(self, w, u);
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) articulation = true;
    }
    if (parent < 0 && children > 1) articulation = true;
  };
  dfs(dfs, 0, -1);
  return !articulation;
}

std::vector<StarGraph> enumerate_stars(int order) {
  if (order < 2 || order > 6) {
    throw UnsupportedOrder("star enumeration supports orders 2..6, got " + std::to_string(order));
  }
  const auto pairs = all_pairs(order);
  const int m = static_cast<int>(pairs.size());

  // Edge permutation induced by each node permutation.
  std::vector<std::vector<int>> edge_maps;
  std::vector<int> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> pair_index(order, std::vector<int>(order, -1));
  for (int e = 0; e < m; ++e) pair_index[pairs[e].u][pairs[e].v] = pair_index[pairs[e].v][pairs[e].u] = e;
  do {
    std::vector<int> map(m);
    for (int e = 0; e < m; ++e) map[e] = pair_index[perm[pairs[e].u]][perm[pairs[e].v]];
    edge_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto canonical = [&](Mask mask) {
    Mask best = ~Mask{0};
    for (const auto& map : edge_maps) {
      Mask image = 0;
      for (int e = 0; e < m; ++e) {
        if (mask & (Mask{1} << e)) image |= Mask{1} << map[e];
      }
      best = std::min(best, image);
    }
    return best;
  };

  std::map<Mask, std::int64_t> classes;
  for (Mask mask = 1; mask < (Mask{1} << m); ++mask) {
    if (biconnected_mask(pairs, mask, order)) ++classes[canonical(mask)];
  }

  std::vector<StarGraph> stars;
  for (const auto& [mask, count] : classes) {
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) {
      if (mask & (Mask{1} << e)) edges.push_back(pairs[e]);
    }
    stars.push_back({ClusterGraph(order, std::move(edges)), count});
  }
  std::stable_sort(stars.begin(), stars.end(),
                   [](const StarGraph& a, const StarGraph& b) { return a.graph.edge_count() < b.graph.edge_count(); });
  return stars;
}

std::string VertexTerm::to_string() const {
  const int k = static_cast<int>(surface_set.size() + domain_set.size());
  std::string out;
  for (int i = 1; i <= k; ++i) {
    if (i > 1) out += "∩";
    const bool boundary = std::find(surface_set.begin(), surface_set.end(), i) != surface_set.end();
    out += (boundary ? "∂D" : "D") + std::to_string(i);
  }
  return out;
}

std::vector<VertexTerm> boundary_expand(int k, int n) {
  if (k < 1) throw InvalidArgument("boundary_expand needs k >= 1");
  if (n < 2) throw InvalidArgument("boundary_expand needs n >= 2");
  if (k > 20) throw InvalidArgument("boundary_expand supports k <= 20");
  std::vector<VertexTerm> terms;
  const int max_boundaries = std::min(k, n);
  for (int j = 1; j <= max_boundaries; ++j) {
    // Lexicographic j-subsets of {1..k}.
    std::vector<int> pick(j);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      VertexTerm term;
      term.surface_set = pick;
      for (int i = 1; i <= k; ++i) {
        if (std::find(pick.begin(), pick.end(), i) == pick.end()) term.domain_set.push_back(i);
      }
      terms.push_back(std::move(term));
      int pos = j - 1;
      while (pos >= 0 && pick[pos] == k - (j - 1 - pos)) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < j; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return terms;
}

std::string boundary_formula(const std::vector<VertexTerm>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i].to_string();
  }
  return out;
}

std::vector<int> vertex_split(const ClusterGraph& g) {
  auto deg = g.degrees();
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

std::vector<TreeEdge> spanning_tree(const ClusterGraph& g) {
  const auto adj = g.adjacency();
  std::vector<int> parent(g.order(), -2);
  std::vector<TreeEdge> tree;
  std::queue<int> queue;
  parent[0] = -1;
  queue.push(0);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    std::vector<int> next = adj[u];
    std::sort(next.begin(), next.end());
    for (int w : next) {
      if (parent[w] != -2) continue;
      parent[w] = u;
      tree.push_back({u, w, g.edge_index(u, w)});
      queue.push(w);
    }
  }
  if (static_cast<int>(tree.size()) != g.order() - 1) throw InvalidArgument("graph is not connected");
  return tree;
}

CycleBasis cycle_basis(const ClusterGraph& g) {
  const auto tree = spanning_tree(g);
  std::vector<int> parent(g.order(), -1);
  std::vector<int> depth(g.order(), 0);
  std::vector<bool> in_tree(g.edge_count(), false);
  for (const auto& t : tree) {
    parent[t.child] = t.parent;
    depth[t.child] = depth[t.parent] + 1;
    in_tree[t.edge] = true;
  }

  CycleBasis basis;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    const int u = g.edges()[e].u;
    const int v = g.edges()[e].v;
    // Walk u up to the common ancestor, then down to v, then close v -> u.
    std::vector<int> up{u};
    std::vector<int> down{v};
    int a = u;
    int b = v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        a = parent[a];
        up.push_back(a);
      } else {
        b = parent[b];
        down.push_back(b);
      }
    }
    down.pop_back();  // common ancestor already in `up`
    Loop loop;
    loop.nodes = up;
    loop.nodes.insert(loop.nodes.end(), down.rbegin(), down.rend());
    const int size = static_cast<int>(loop.nodes.size());
    for (int i = 0; i < size; ++i) loop.edges.push_back(g.edge_index(loop.nodes[i], loop.nodes[(i + 1) % size]));
    basis.loops.push_back(std::move(loop));
  }
  return basis;
}

std::int64_t automorphism_order(const ClusterGraph& g) {
  if (g.order() > 8) throw InvalidArgument("automorphism_order supports order <= 8");
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool preserved = true;
    for (const auto& e : g.edges()) {
      if (!g.has_edge(perm[e.u], perm[e.v])) {
        preserved = false;
        break;
      }
    }
    if (preserved) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace mayer

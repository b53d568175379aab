#include "permbox/graph.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "permbox/errors.hpp"

namespace permbox {

void Graph::add_edge(unsigned u, unsigned v) {
  if (u == v)
    throw std::invalid_argument("loops are not allowed");
  if (u > v)
    std::swap(u, v);
  edges.emplace_back(u, v);
}

void Graph::normalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<unsigned>> Graph::adjacency() const {
  std::vector<std::vector<unsigned>> adj(n);
  for (const auto &[u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool Graph::adjacent(unsigned u, unsigned v) const {
  if (u > v)
    std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

void Digraph::add_arc(unsigned u, unsigned v) {
  if (u == v)
    throw std::invalid_argument("loops are not allowed");
  arcs.emplace_back(u, v);
}

void Digraph::normalize() {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

Graph Digraph::symmetrized() const {
  Graph g;
  g.n = n;
  for (const auto &[u, v] : arcs)
    g.add_edge(u, v);
  g.normalize();
  return g;
}

Graph complete_graph(unsigned n) {
  Graph g;
  g.n = n;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  g.normalize();
  return g;
}

Graph path_graph(unsigned n) {
  Graph g;
  g.n = n;
  for (unsigned u = 0; u + 1 < n; ++u)
    g.add_edge(u, u + 1);
  g.normalize();
  return g;
}

Graph cycle_graph(unsigned n) {
  Graph g;
  g.n = n;
  for (unsigned u = 0; u < n; ++u)
    g.add_edge(u, (u + 1) % n);
  g.normalize();
  return g;
}

std::vector<unsigned> bfs_distances(const Graph &g, unsigned base) {
  auto adj = g.adjacency();
  std::vector<unsigned> dist(g.n, UINT_MAX);
  std::vector<unsigned> queue{base};
  dist[base] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (unsigned v : adj[queue[i]])
      if (dist[v] == UINT_MAX) {
        dist[v] = dist[queue[i]] + 1;
        queue.push_back(v);
      }
  return dist;
}

bool is_connected(const Graph &g) {
  if (g.n == 0)
    return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), UINT_MAX) == dist.end();
}

unsigned center_vertex(const Graph &g) {
  unsigned best = 0;
  unsigned best_ecc = UINT_MAX;
  for (unsigned v = 0; v < g.n; ++v) {
    auto dist = bfs_distances(g, v);
    unsigned ecc = 0;
    for (unsigned d : dist)
      if (d != UINT_MAX)
        ecc = std::max(ecc, d);
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = v;
    }
  }
  return best;
}

Digraph orbital_digraph(const PermGroup &g, unsigned a, unsigned b) {
  if (a == b)
    throw HypothesisViolation("orbital requires two distinct points");
  if (!g.is_transitive())
    throw HypothesisViolation("orbital requires a transitive group");
  Digraph d;
  d.n = g.degree();
  std::set<std::pair<unsigned, unsigned>> seen;
  std::vector<std::pair<unsigned, unsigned>> queue{{a, b}};
  seen.insert({a, b});
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &gen : g.generators()) {
      std::pair<unsigned, unsigned> image{gen[queue[i].first],
                                          gen[queue[i].second]};
      if (seen.insert(image).second)
        queue.push_back(image);
    }
  d.arcs.assign(seen.begin(), seen.end());
  d.normalize();
  return d;
}

Graph orbital_graph(const PermGroup &g, unsigned a, unsigned b) {
  return orbital_digraph(g, a, b).symmetrized();
}

namespace {

// Articulation points by Tarjan's low-link DFS (iterative).
std::vector<bool> articulation_points(const Graph &g) {
  auto adj = g.adjacency();
  std::vector<bool> cut(g.n, false);
  std::vector<int> depth(g.n, -1), low(g.n, 0), parent(g.n, -1);
  for (unsigned root = 0; root < g.n; ++root) {
    if (depth[root] >= 0)
      continue;
    std::vector<std::pair<unsigned, std::size_t>> stack{{root, 0}};
    depth[root] = 0;
    low[root] = 0;
    unsigned root_children = 0;
    while (!stack.empty()) {
      unsigned v = stack.back().first;
      std::size_t idx = stack.back().second;
      if (idx < adj[v].size()) {
        stack.back().second++;
        unsigned to = adj[v][idx];
        if (depth[to] < 0) {
          depth[to] = depth[v] + 1;
          low[to] = depth[to];
          parent[to] = static_cast<int>(v);
          if (v == root)
            ++root_children;
          stack.push_back({to, 0});
        } else if (static_cast<int>(to) != parent[v]) {
          low[v] = std::min(low[v], depth[to]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          unsigned p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= depth[p])
            cut[p] = true;
        }
      }
    }
    if (root_children >= 2)
      cut[root] = true;
  }
  return cut;
}

} // namespace

SmallConnectivity connectivity_small(const Graph &g) {
  if (g.n <= 1 || !is_connected(g))
    return SmallConnectivity::Zero;
  auto cut = articulation_points(g);
  if (std::find(cut.begin(), cut.end(), true) != cut.end())
    return SmallConnectivity::One;
  return SmallConnectivity::TwoOrMore;
}

bool is_two_connected(const Graph &g) {
  return g.n >= 3 && connectivity_small(g) == SmallConnectivity::TwoOrMore;
}

Graph cartesian_graph_product(const Graph &g, const Graph &s,
                              std::uint64_t vertex_cap) {
  std::uint64_t total = static_cast<std::uint64_t>(g.n) * s.n;
  if (total > vertex_cap)
    throw CapExceeded("cartesian product vertex cap exceeded");
  Graph out;
  out.n = static_cast<unsigned>(total);
  for (unsigned a = 0; a < g.n; ++a)
    for (unsigned b = 0; b < s.n; ++b) {
      for (const auto &[u, v] : s.edges)
        if (b == u)
          out.add_edge(a * s.n + u, a * s.n + v);
      for (const auto &[u, v] : g.edges)
        if (a == u)
          out.add_edge(u * s.n + b, v * s.n + b);
    }
  out.normalize();
  return out;
}

} // namespace permbox

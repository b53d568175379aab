#ifndef PERMBOX_GRAPH_HPP
#define PERMBOX_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "permbox/perm_group.hpp"

namespace permbox {

/// Simple undirected graph on {0..n-1}; edges stored as sorted (u,v) pairs
/// with u < v, no loops, no multiplicities.
struct Graph {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;

  void add_edge(unsigned u, unsigned v);
  void normalize(); // sort + dedupe
  std::vector<std::vector<unsigned>> adjacency() const;
  bool adjacent(unsigned u, unsigned v) const;
};

/// Simple digraph on {0..n-1}; arcs are distinct ordered pairs, no loops.
struct Digraph {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> arcs;

  void add_arc(unsigned u, unsigned v);
  void normalize();
  Graph symmetrized() const;
};

Graph complete_graph(unsigned n);
Graph path_graph(unsigned n);
Graph cycle_graph(unsigned n);

bool is_connected(const Graph &g);
// Distances from `base` (unreachable = UINT_MAX).
std::vector<unsigned> bfs_distances(const Graph &g, unsigned base);
// A vertex of minimal eccentricity (ties broken by index).
unsigned center_vertex(const Graph &g);

// Arc orbit (a,b)^G as a digraph on the group's points. Throws
// HypothesisViolation when a == b or the group is intransitive.
Digraph orbital_digraph(const PermGroup &g, unsigned a, unsigned b);
Graph orbital_graph(const PermGroup &g, unsigned a, unsigned b);

enum class SmallConnectivity { Zero, One, TwoOrMore };
// 0 for disconnected or single vertex, 1 when a cut vertex exists,
// >= 2 otherwise.
SmallConnectivity connectivity_small(const Graph &g);

// Adjacency exactly when coordinate distances sum to 1. Vertex (a,b) of
// the product is encoded a * |S| + b. Throws CapExceeded past the cap.
Graph cartesian_graph_product(const Graph &g, const Graph &s,
                              std::uint64_t vertex_cap = 100000);

// 2-connectivity test used by lobe hypotheses (|V| >= 3, no cut vertex).
bool is_two_connected(const Graph &g);

} // namespace permbox

#endif

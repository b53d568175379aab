#ifndef PERMBOX_CONN_ONE_HPP
#define PERMBOX_CONN_ONE_HPP

#include <optional>
#include <string>
#include <vector>

#include "permbox/graph.hpp"
#include "permbox/wreath.hpp"

namespace permbox {

/// Lobes (maximal 2-connected subgraphs, bridges included as K2 lobes),
/// cut vertices, and the block-cut-vertex tree. The BCV tree is bipartite
/// on all original vertices and all lobes: vertex i of the tree is point i
/// for i < n, and lobe (i - n) otherwise.
struct ConnOneDecomposition {
  unsigned n = 0;
  std::vector<std::vector<unsigned>> lobes; // sorted vertex sets
  std::vector<unsigned> cut_vertices;
  Graph bcv_tree;
};

// Biconnected components via articulation-point DFS. Throws
// HypothesisViolation on disconnected input.
ConnOneDecomposition lobes_and_bcv_tree(const Graph &g);

/// A truncated tree-of-lobes with its lobe registry.
struct GammaGraph {
  Graph graph;
  std::vector<std::vector<unsigned>> lobe_registry; // lobe -> sorted vertices
  unsigned root = 0;
  unsigned lobe_depth = 0; // layers of lobes from the root
  // Vertices lying in exactly m lobes (the interior of the truncation).
  std::vector<unsigned> interior_vertices;
};

// Glue copies of `lambda` so every interior vertex lies in exactly m
// copies, truncated after `depth` lobe layers. Requires lambda 2-connected
// with >= 3 vertices (per the connectivity-one structure theorems);
// m == 1 degenerates to lambda itself. Throws CapExceeded past vertex_cap.
GammaGraph gamma_graph(const Graph &lambda, unsigned m, unsigned depth,
                       std::uint64_t vertex_cap = 100000);

/// Outcome of the connectivity-one primitivity conditions; `verdict` is the
/// conjunction and `failing_clause` names the first failed clause.
struct ConnOneVerdict {
  bool lobes_pairwise_isomorphic = false;
  bool lobes_at_least_three_vertices = false;
  bool lobe_groups_primitive = false;
  bool no_directed_cycle_lobe = true; // digraph clause; true for graphs
  bool verdict = false;
  std::string failing_clause; // empty when verdict holds
};

// Graph form: lobe registry + one lobe group acting on the vertices of
// each lobe, listed per lobe (positions follow the registry's sorted
// vertex order).
ConnOneVerdict
conn_one_primitivity_check(const std::vector<std::vector<unsigned>> &registry,
                           const std::vector<PermGroup> &lobe_groups);

// Digraph form: re-checks each lobe for the directed-cycle exclusion.
ConnOneVerdict
conn_one_primitivity_check(const Digraph &g,
                           const std::vector<std::vector<unsigned>> &registry,
                           const std::vector<PermGroup> &lobe_groups);

// Literal induced action of the setwise stabiliser of `lobe` on it.
// Enumeration-based; throws CapExceeded past enum_cap.
PermGroup induced_lobe_action(const PermGroup &g,
                              const std::vector<unsigned> &lobe,
                              std::uint64_t enum_cap = 1000000);

// Induced action of the stabiliser of `vertex` on the registry lobes
// containing it.
PermGroup induced_lobe_set_action(const PermGroup &g, unsigned vertex,
                                  const std::vector<std::vector<unsigned>> &registry,
                                  std::uint64_t enum_cap = 1000000);

// Small-graph isomorphism (backtracking); used for the pairwise-isomorphic
// lobes clause.
bool graphs_isomorphic(const Graph &a, const Graph &b);

// Verifies that the orbital graph of the embedded product-action group on
// the pair (gamma-tuple, delta-in-first-coordinate) equals the m-fold
// Cartesian power of the orbital graph of `h` on (gamma, delta),
// edge-for-edge.
bool orbital_cartesian_check(const PermGroup &embedded,
                             const ProductActionSpace &space,
                             const PermGroup &h, unsigned gamma,
                             unsigned delta, std::uint64_t degree_cap = 4096);
// Same check with the canonical embedded group H Wr S_m.
bool orbital_cartesian_check(const PermGroup &h, unsigned gamma,
                             unsigned delta, unsigned m,
                             std::uint64_t degree_cap = 4096);

} // namespace permbox

#endif

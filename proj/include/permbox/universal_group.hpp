#ifndef PERMBOX_UNIVERSAL_GROUP_HPP
#define PERMBOX_UNIVERSAL_GROUP_HPP

#include <cstdint>
#include <vector>

#include "permbox/graph.hpp"
#include "permbox/perm_group.hpp"
#include "permbox/tree_ball.hpp"

namespace permbox {

/// Truncation of the universal group with prescribed local actions: all
/// ball automorphisms whose theta-value lies in G1 at interior V1 vertices
/// and in G2 at interior V2 vertices (boundary unconstrained), together
/// with the induced action on the interior V2 vertices (the points).
///
/// Every automorphism of a finite ball fixes its centre, so the enumerated
/// group is the truncation-scale stabiliser of the root; transitivity of
/// the box product on points is therefore checked separately, as
/// reachability of every interior point from the root by an admissible
/// partial isomorphism.
struct BoxTruncation {
  TreeBall ball;
  LegalColouring colouring;
  PermGroup g1;
  PermGroup g2;
  PermGroup ball_group;            // on ball vertices
  std::vector<unsigned> point_set; // interior V2 vertices, ascending
  PermGroup point_action;          // induced on point_set positions
  bool point_transitive_at_scale = false;
  bool lobe_transitive_at_scale = false;

  BoxTruncation() : g1(0), g2(0), ball_group(0), point_action(0) {}
};

// Enumerates the admissible ball group by layered backtracking over local
// permutations. The order is known in advance from the transporter sizes;
// CapExceeded is raised before enumeration when it exceeds group_cap.
// Degrees of g1, g2 must equal d1, d2.
BoxTruncation truncated_universal_group(const PermGroup &g1,
                                        const PermGroup &g2, unsigned radius,
                                        std::uint64_t group_cap = 1000000,
                                        std::uint64_t vertex_cap = 100000);

// Same, on an existing ball and colouring (fixture reuse, conjugacy tests).
BoxTruncation truncated_universal_group_on(const TreeBall &ball,
                                           const LegalColouring &colouring,
                                           const PermGroup &g1,
                                           const PermGroup &g2,
                                           std::uint64_t group_cap = 1000000);

// The induced permutation group on interior V2 vertices.
PermGroup box_point_action(const BoxTruncation &truncation);

// Is there an admissible partial isomorphism B(from,s) -> B(to,s), with
// s = radius - depth(to), taking from to to? (`from` and `to` on the same
// side; theta-constraints at interior-of-domain vertices.)
bool admissible_map_exists(const TreeBall &ball, const LegalColouring &col,
                           const PermGroup &g1, const PermGroup &g2,
                           unsigned from, unsigned to);

// Induced group on B(site) of the admissible automorphism group of the
// sub-ball B(site, radius - depth(site)); site must be interior. This is
// the truncation-scale local action: ~G1 at V1 sites (the lobe action),
// ~G2 at V2 sites (the action on the lobes through the point).
PermGroup local_action(const BoxTruncation &truncation, unsigned site,
                       std::uint64_t group_cap = 1000000);

// local_action compared against the prescribed group by
// permutation_isomorphism.
bool local_action_matches(const BoxTruncation &truncation, unsigned site);

// The side-preserving ball automorphism conjugating the universal group
// for colouring `a` onto the one for colouring `b`: built by matching arc
// colours child-by-child from the root.
Permutation colouring_conjugator(const TreeBall &ball, const LegalColouring &a,
                                 const LegalColouring &b);

// Two-sided generator containment: c^-1 U_a c <= U_b and c U_b c^-1 <= U_a.
bool verify_colouring_conjugacy(const BoxTruncation &u_a,
                                const BoxTruncation &u_b,
                                const Permutation &conjugator);

// Predicted orbit size of each interior V2 vertex under the ball group:
// the product of local orbit sizes along the root geodesic (the factor at
// the root is a full G-orbit of a colour, afterwards an up-colour
// stabiliser orbit). Cross-checked against enumeration in tests, never
// trusted alone.
std::vector<std::pair<unsigned, std::uint64_t>>
geodesic_orbit_shortcut(const BoxTruncation &truncation);

// Minimal orbit size > 1 of the point action; HypothesisViolation when all
// orbits are trivial.
unsigned box_sd(const BoxTruncation &truncation);

/// Point graph of the truncation: all V2 vertices, adjacent when they
/// share a lobe (tree distance 2); lobes are B(t) for interior V1 t.
struct BoxPointGraph {
  Graph graph;
  std::vector<unsigned> vertex_ids; // graph index -> ball vertex
  std::vector<std::vector<unsigned>> lobe_registry; // graph indices
};

BoxPointGraph box_point_graph(const BoxTruncation &truncation);

} // namespace permbox

#endif

#ifndef PERMBOX_TREE_BALL_HPP
#define PERMBOX_TREE_BALL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permbox/permutation.hpp"

namespace permbox {

enum class Side : unsigned char { V1 = 1, V2 = 2 };

/// Truncation of the (d1, d2)-biregular tree to the ball of tree-edge
/// radius `radius` around a root. V1 vertices have valency d1, V2
/// vertices valency d2; vertices are numbered by BFS from the root. A
/// vertex is interior when its full neighbourhood lies inside the ball
/// (depth <= radius - 1).
struct TreeBall {
  unsigned d1 = 0;
  unsigned d2 = 0;
  unsigned radius = 0;
  Side root_side = Side::V2;

  std::vector<Side> side;        // per vertex
  std::vector<unsigned> depth;   // per vertex
  std::vector<int> parent;       // -1 at the root
  std::vector<std::vector<unsigned>> children;

  unsigned root() const { return 0; }
  unsigned size() const { return static_cast<unsigned>(side.size()); }
  bool interior(unsigned v) const { return depth[v] + 1 <= radius; }
  unsigned valency_of_side(Side s) const { return s == Side::V1 ? d1 : d2; }
  // Colour-set size of a side: out-arcs of a V_i vertex take d_i colours.
  unsigned colours_of_side(Side s) const { return valency_of_side(s); }
  std::vector<unsigned> neighbours(unsigned v) const;
  std::vector<unsigned> interior_vertices(Side s) const;
};

// Throws CapExceeded past vertex_cap, std::invalid_argument for degrees < 2.
TreeBall build_ball(unsigned d1, unsigned d2, unsigned radius, Side root_side,
                    std::uint64_t vertex_cap = 100000);

/// A legal arc colouring in vertex-label form: in_colour[v] is the common
/// colour of all arcs into v, so the arc u -> v carries in_colour[v]. For
/// v in V_i the label lies in the opposite side's colour set (arcs into v
/// originate on the other side).
struct LegalColouring {
  std::vector<unsigned> in_colour;

  unsigned arc_colour(unsigned /*from*/, unsigned to) const {
    return in_colour[to];
  }
};

// Deterministic colouring: BFS, least unused colour among a parent's
// already-coloured children (the parent's own in-colour is excluded, since
// legality needs neighbour labels bijective around interior vertices).
LegalColouring legal_colouring(const TreeBall &ball);

// Seeded random legal colouring (same constraints, shuffled choices).
LegalColouring random_legal_colouring(const TreeBall &ball,
                                      std::uint64_t seed);

// Checks both legality clauses arc-by-arc at interior vertices.
bool colouring_is_legal(const TreeBall &ball, const LegalColouring &col);

// Local action of a ball automorphism at an interior vertex v in V_i: the
// permutation of the colour set X_i sending the colour of arc (v,w) to the
// colour of arc (g v, g w). Throws HypothesisViolation when v or its image
// is not interior.
Permutation theta_map(const TreeBall &ball, const Permutation &g, unsigned v,
                      const LegalColouring &col);

// Verifies that a vertex bijection is a ball automorphism: arcs, sides and
// depths preserved.
bool is_ball_automorphism(const TreeBall &ball, const Permutation &g);

// JSON round-trip for fixture reuse (schema "permbox.treeball/1").
std::string tree_ball_to_json(const TreeBall &ball, const LegalColouring &col);
void tree_ball_from_json(const std::string &text, TreeBall &ball,
                         LegalColouring &col);

} // namespace permbox

#endif

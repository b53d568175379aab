#ifndef PERMBOX_WREATH_HPP
#define PERMBOX_WREATH_HPP

#include <cstdint>
#include <vector>

#include "permbox/perm_group.hpp"

namespace permbox {

/// Product-action point bookkeeping: points of X^m are encoded row-major
/// with the last coordinate fastest, so (a_1..a_m) <-> sum a_i * |X|^(m-i).
struct ProductActionSpace {
  unsigned base_degree = 0; // |X|
  unsigned arity = 0;       // m

  unsigned total_degree() const;
  std::vector<unsigned> decode(unsigned point) const;
  unsigned encode(const std::vector<unsigned> &tuple) const;

  // The fibre through `point` in coordinate `coord` (points varying that
  // coordinate only), sorted ascending.
  std::vector<unsigned> fibre(unsigned point, unsigned coord) const;
  // Canonical id of that fibre: coord * |X|^(m-1) + rank of the residual
  // tuple (the point with coordinate `coord` zeroed, collapsed).
  unsigned fibre_id(unsigned point, unsigned coord) const;
  unsigned fibre_count() const;
  // Image of a fibre id under a permutation of the points.
  unsigned fibre_image(unsigned fibre, const Permutation &g) const;
};

/// A realized wreath product with its construction data.
struct WreathProduct {
  PermGroup group;          // the realized permutation group
  PermGroup bottom;         // G on X
  PermGroup top;            // H on {0..m-1}
  ProductActionSpace space; // meaningful for the product action
  bool product_action = true;
};

// Imprimitive action on X x {0..m-1}; point (a, i) encoded as i*|X| + a.
// Throws std::invalid_argument on degree-0 inputs.
WreathProduct wreath_imprimitive(const PermGroup &g, const PermGroup &h);

// Product action on X^m. Throws CapExceeded when |X|^m exceeds the cap.
WreathProduct wreath_product_action(const PermGroup &g, const PermGroup &h,
                                    std::uint64_t degree_cap = 4096);

// Structural primitivity of the product action:
// g primitive and nonregular, and h transitive.
bool wr_primitivity_predicate(const PermGroup &g, const PermGroup &h);

// Subdegree of the product action for transitive nonregular g and
// transitive h: m * sd(g). Computed structurally, no realization.
unsigned wr_product_action_sd(const PermGroup &g, const PermGroup &h);

/// Per-clause outcome of the fibrelobe-fullness test inside a wreath
/// product in product action.
struct FibrelobeReport {
  bool point_transitive = false;
  bool fibrelobe_transitive = false;
  bool induced_on_fibrelobe_matches = false; // induced group on a fibre == G
  bool induced_on_point_fibrelobes_matches = false; // stabiliser on F(alpha) == H
  bool all() const {
    return point_transitive && fibrelobe_transitive &&
           induced_on_fibrelobe_matches && induced_on_point_fibrelobes_matches;
  }
};

// Checks a subgroup s <= ambient (membership-verified, else
// HypothesisViolation) against the four fibrelobe-full clauses. Group
// equality is literal (finite groups are closed).
FibrelobeReport fibrelobe_full_check_wr(const PermGroup &s,
                                        const WreathProduct &ambient,
                                        std::uint64_t enum_cap = 1000000);

} // namespace permbox

#endif

#ifndef PERMBOX_CARTESIAN_HPP
#define PERMBOX_CARTESIAN_HPP

#include <cstdint>
#include <vector>

#include "permbox/perm_group.hpp"

namespace permbox {

/// A nontrivial homogeneous cartesian decomposition of {0..n-1}: m >= 2
/// partitions, all of the same cardinality l >= 2, every transversal
/// choice of parts intersecting in exactly one point. Canonical form:
/// each part sorted, parts sorted, partitions sorted.
struct CartesianDecomposition {
  std::vector<std::vector<std::vector<unsigned>>> partitions;

  unsigned arity() const { return static_cast<unsigned>(partitions.size()); }
  bool valid(unsigned degree) const;    // axioms, independent of any group
  bool invariant_under(const PermGroup &g) const;
  void canonicalize();
};

// All G-invariant nontrivial homogeneous cartesian decompositions,
// deduplicated up to reordering partitions and returned in canonical order.
//
// Search: the set of point pairs lying in a common part of all but one
// partition is a union of orbital graphs with constant valency m(l-1);
// every candidate union is tested by reconstructing the grid structure
// (lines = maximal cliques, directions by matching-adjacency closure,
// partitions = components after removing one direction's lines) and the
// result is verified against the axioms and invariance.
//
// Throws CapExceeded beyond `degree_cap` or when the orbital-subset scan
// exceeds an internal work budget.
std::vector<CartesianDecomposition>
find_cartesian_decompositions(const PermGroup &g, unsigned degree_cap = 64);

} // namespace permbox

#endif

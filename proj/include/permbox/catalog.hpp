#ifndef PERMBOX_CATALOG_HPP
#define PERMBOX_CATALOG_HPP

#include "permbox/perm_group.hpp"

namespace permbox {

// Standard named groups on {0..n-1}.
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
// Dihedral group of order `order` (even, >= 4) on order/2 points.
PermGroup dihedral_group(unsigned order);

} // namespace permbox

#endif

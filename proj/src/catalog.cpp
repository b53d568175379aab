#include "permbox/catalog.hpp"

#include <stdexcept>

namespace permbox {

PermGroup symmetric_group(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("degree 0");
  if (n == 1)
    return PermGroup(1);
  std::vector<std::vector<unsigned>> full_cycle{{}};
  for (unsigned i = 0; i < n; ++i)
    full_cycle[0].push_back(i);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}}),
                                Permutation::from_cycles(n, full_cycle)};
  return PermGroup(gens);
}

PermGroup alternating_group(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("degree 0");
  if (n <= 2)
    return PermGroup(n);
  if (n == 3)
    return PermGroup({Permutation::from_cycles(3, {{0, 1, 2}})});
  std::vector<unsigned> cycle;
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i)
      cycle.push_back(i);
  } else {
    for (unsigned i = 1; i < n; ++i)
      cycle.push_back(i);
  }
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}}),
                                Permutation::from_cycles(n, {cycle})};
  return PermGroup(gens);
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0)
    throw std::invalid_argument("degree 0");
  if (n == 1)
    return PermGroup(1);
  std::vector<unsigned> cycle;
  for (unsigned i = 0; i < n; ++i)
    cycle.push_back(i);
  return PermGroup({Permutation::from_cycles(n, {cycle})});
}

PermGroup dihedral_group(unsigned order) {
  if (order < 6 || order % 2 != 0)
    throw std::invalid_argument("dihedral order must be even and at least 6");
  unsigned n = order / 2;
  std::vector<unsigned> rotation;
  for (unsigned i = 0; i < n; ++i)
    rotation.push_back(i);
  // Reflection i -> n-1-i.
  std::vector<std::vector<unsigned>> reflection_cycles;
  for (unsigned i = 0; 2 * i + 1 < n; ++i)
    reflection_cycles.push_back({i, n - 1 - i});
  std::vector<Permutation> gens{
      Permutation::from_cycles(n, {rotation}),
      Permutation::from_cycles(n, reflection_cycles)};
  return PermGroup(gens);
}

} // namespace permbox

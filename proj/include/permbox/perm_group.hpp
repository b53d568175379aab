#ifndef PERMBOX_PERM_GROUP_HPP
#define PERMBOX_PERM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "permbox/permutation.hpp"

namespace permbox {

/// A partition of {0..degree-1} into blocks permuted by a group. Blocks and
/// their contents are sorted ascending.
struct BlockSystem {
  std::vector<std::vector<unsigned>> blocks;

  unsigned block_size() const {
    return blocks.empty() ? 0 : static_cast<unsigned>(blocks[0].size());
  }
  unsigned block_count() const { return static_cast<unsigned>(blocks.size()); }
};

/// Orbits of a point stabiliser, with the pairing involution. The suborbit
/// containing the base point comes first; the rest are sorted by
/// (size, smallest element). sd is absent for regular groups.
struct SuborbitReport {
  unsigned base_point = 0;
  std::vector<std::vector<unsigned>> suborbits; // each sorted ascending
  std::vector<unsigned> paired;                 // involution on suborbit indices
  std::optional<unsigned> sd;

  std::vector<unsigned> sizes() const;
  // Throws HypothesisViolation when sd is undefined (regular group).
  unsigned sd_value() const;
};

enum class RegularityStatus { Regular, SemiregularIntransitive, Nonregular };

/// A finite permutation group given by generators, with a stabiliser chain
/// (base in natural point order) backing order, membership and stabiliser
/// queries. Immutable after construction and safe to share across threads.
class PermGroup {
public:
  // Trivial group of the given degree.
  explicit PermGroup(unsigned degree);

  // Throws std::invalid_argument on an empty generator list or mixed degrees.
  // When forced_first_base is set, the stabiliser chain starts at that point
  // (used for point stabilisers); otherwise base points follow natural order.
  explicit PermGroup(std::vector<Permutation> generators,
                     std::optional<unsigned> forced_first_base = std::nullopt);

  unsigned degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation &p) const;

  std::vector<std::vector<unsigned>> orbits() const;
  std::vector<unsigned> orbit_of(unsigned point) const;
  bool is_transitive() const;

  // Some group element mapping `from` to `to`, or nullopt.
  std::optional<Permutation> transporter(unsigned from, unsigned to) const;

  PermGroup point_stabilizer(unsigned point) const;

  // All elements, in a deterministic order. Throws CapExceeded when the
  // order exceeds `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = 1000000) const;

  // Uniformly random element from the stabiliser-chain transversals.
  Permutation random_element(std::uint64_t &rng_state) const;

  // Small generating set recovered from the stabiliser chain (strong
  // generators that successively grow the group).
  std::vector<Permutation> small_generating_set() const;

private:
  struct ChainLevel {
    unsigned base = 0;
    std::vector<Permutation> gens; // generators of this level's stabiliser
    std::vector<int> orbit_index;  // point -> position in orbit, or -1
    std::vector<unsigned> orbit;
    std::vector<Permutation> transversal; // transversal[i] maps base to orbit[i]
  };

  void rebuild_level_orbit(ChainLevel &level) const;
  // Sifts p through levels [from..end); returns the residue.
  Permutation sift(const Permutation &p, std::size_t from = 0) const;
  void schreier_sims(std::optional<unsigned> forced_first_base);
  void close_level(std::size_t i);
  void enumerate_rec(std::size_t level, const Permutation &suffix,
                     std::vector<Permutation> &out) const;

  unsigned degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> chain_;
  std::uint64_t order_ = 1;
};

// --- permcore operations -------------------------------------------------

// Throws std::invalid_argument on empty input or degree mismatch.
PermGroup group_from_generators(const std::vector<Permutation> &gens);

RegularityStatus regularity_status(const PermGroup &g);
bool is_semiregular(const PermGroup &g);
bool is_regular(const PermGroup &g);

// Throws HypothesisViolation when g is not transitive.
SuborbitReport suborbits(const PermGroup &g, unsigned base_point);

// Minimal subdegree > 1; throws HypothesisViolation for regular groups.
unsigned sd(const PermGroup &g);

// Minimal block system in which `a` and `b` share a block (union-find join
// propagation). Requires transitivity.
BlockSystem minimal_block_system(const PermGroup &g, unsigned a, unsigned b);

// Primary primitivity test (minimal blocks over all pairs through 0).
// On failure `witness`, when non-null, receives a minimal nontrivial system.
// Throws HypothesisViolation when g is not transitive or degree < 2.
bool is_primitive(const PermGroup &g, BlockSystem *witness = nullptr);

// Independent criterion: every orbital graph {a,b}^G is connected.
bool higman_primitivity(const PermGroup &g);

/// A permutation isomorphism (phi, theta): theta(p^g) = theta(p)^phi(g).
struct PermIso {
  std::vector<unsigned> point_map;        // theta
  std::vector<Permutation> generator_images; // phi on g.generators()
};

// Backtracking over point bijections with orbital-pattern pruning.
// Throws CapExceeded when either degree exceeds `degree_cap`.
std::optional<PermIso> permutation_isomorphism(const PermGroup &g,
                                               const PermGroup &h,
                                               unsigned degree_cap = 16);

// The subgroup of Sym(points) induced by restricting `gens` to an invariant
// point set (points listed ascending; images re-indexed by position).
PermGroup induced_action(const std::vector<Permutation> &gens,
                         const std::vector<unsigned> &points);

// Group equality as subgroups of the same symmetric group.
bool same_group(const PermGroup &a, const PermGroup &b);

} // namespace permbox

#endif

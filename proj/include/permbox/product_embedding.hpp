#ifndef PERMBOX_PRODUCT_EMBEDDING_HPP
#define PERMBOX_PRODUCT_EMBEDDING_HPP

#include <cstdint>
#include <vector>

#include "permbox/perm_group.hpp"
#include "permbox/wreath.hpp"

namespace permbox {

/// The product-action embedding of a group G with a transitive normal
/// subgroup M = K_1 x ... x K_m whose components are permuted transitively
/// by a point stabiliser. Carries the maps sigma, psi, phi, theta and the
/// lifted monomorphism phi_hat into Sym(Y^m), where Y is the coset space
/// of pi_1(M_alpha) in K_1 and theta(alpha) = (gamma, ..., gamma).
class PAEmbedding {
public:
  unsigned alpha = 0;
  unsigned arity = 0;                 // m
  std::vector<PermGroup> components;  // K_1..K_m inside Sym(Omega)
  PermGroup m_group;                  // M
  PermGroup stabilizer;               // G_alpha
  PermGroup projection_stab;          // R_1 = pi_1(M_alpha), inside Sym(Omega)
  std::vector<Permutation> transversal; // g_i with K_1^{g_i} = K_i, g_1 = 1
  std::vector<Permutation> coset_reps;  // representatives of Y, rep[gamma] = id
  PermGroup component_on_y;           // K_1 acting on Y
  unsigned gamma = 0;
  ProductActionSpace space;           // {|Y|, m}
  std::vector<unsigned> theta;        // Omega -> encoded Y^m
  std::vector<unsigned> theta_inv;

  PAEmbedding() : m_group(0), stabilizer(0), projection_stab(0), component_on_y(0) {}

  // Coset of an element of K_1.
  unsigned y_of_element(const Permutation &k) const;
  // Y-action of an element of K_1.
  Permutation y_action(const Permutation &k) const;
  // Component permutation induced by conjugation, for g in G_alpha.
  Permutation sigma(const Permutation &g) const;
  // psi(h) in Sym(Y)_gamma for h normalising K_1 in G_alpha.
  Permutation psi(const Permutation &h) const;
  // pi_i(x) for x in M.
  std::vector<Permutation> project(const Permutation &x) const;
  // The lifted embedding: permutation of Y^m induced by any f in Sym(Omega).
  Permutation phi_hat(const Permutation &f) const;

  // Right-hand sides of the embedding's two action formulas.
  Permutation stabilizer_formula(const Permutation &g) const;
  Permutation base_formula(const Permutation &x) const;
};

// Builds and verifies the embedding. All hypotheses are checked directly
// (HypothesisViolation names the failing one): M transitive and normal,
// internal direct product of the components, components permuted
// transitively by G_alpha, M_alpha equal to the product of its projections,
// faithful coset action. The action formulas are verified on generators.
PAEmbedding pa_embedding(const PermGroup &g,
                         const std::vector<PermGroup> &components,
                         unsigned alpha, std::uint64_t enum_cap = 1000000);

} // namespace permbox

#endif

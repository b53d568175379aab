#include "permbox/product_embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "permbox/errors.hpp"

namespace permbox {

namespace {

Permutation conjugate(const Permutation &x, const Permutation &g) {
  // Right-action convention: x^g = g^-1 x g.
  return g.inverse() * x * g;
}

} // namespace

unsigned PAEmbedding::y_of_element(const Permutation &k) const {
  for (unsigned y = 0; y < coset_reps.size(); ++y)
    if (projection_stab.is_trivial()
            ? k == coset_reps[y]
            : projection_stab.contains(k * coset_reps[y].inverse()))
      return y;
  throw std::logic_error("element outside the component group");
}

Permutation PAEmbedding::y_action(const Permutation &k) const {
  std::vector<unsigned> images(coset_reps.size());
  for (unsigned y = 0; y < coset_reps.size(); ++y)
    images[y] = y_of_element(coset_reps[y] * k);
  return Permutation(images);
}

Permutation PAEmbedding::sigma(const Permutation &g) const {
  std::vector<unsigned> images(arity);
  for (unsigned i = 0; i < arity; ++i) {
    unsigned target = arity;
    for (unsigned j = 0; j < arity && target == arity; ++j) {
      bool inside = components[j].order() == components[i].order();
      for (const auto &gen : components[i].generators()) {
        if (!inside)
          break;
        inside = components[j].contains(conjugate(gen, g));
      }
      if (inside)
        target = j;
    }
    if (target == arity)
      throw HypothesisViolation(
          "conjugation does not permute the components");
    images[i] = target;
  }
  return Permutation(images);
}

Permutation PAEmbedding::psi(const Permutation &h) const {
  std::vector<unsigned> images(coset_reps.size());
  for (unsigned y = 0; y < coset_reps.size(); ++y)
    images[y] = y_of_element(conjugate(coset_reps[y], h));
  return Permutation(images);
}

std::vector<Permutation> PAEmbedding::project(const Permutation &x) const {
  std::vector<Permutation> parts;
  parts.reserve(arity);
  Permutation rest = x;
  for (unsigned i = 0; i < arity; ++i) {
    if (i + 1 == arity) {
      if (!components[i].contains(rest))
        throw HypothesisViolation("element is not in the component product");
      parts.push_back(rest);
      break;
    }
    // Tail group generated by the later components.
    std::vector<Permutation> tail_gens;
    for (unsigned j = i + 1; j < arity; ++j)
      for (const auto &gen : components[j].generators())
        tail_gens.push_back(gen);
    PermGroup tail = tail_gens.empty()
                         ? PermGroup(rest.degree())
                         : PermGroup(tail_gens);
    bool found = false;
    for (const auto &cand : components[i].elements()) {
      if (tail.contains(cand.inverse() * rest)) {
        parts.push_back(cand);
        rest = cand.inverse() * rest;
        found = true;
        break;
      }
    }
    if (!found)
      throw HypothesisViolation("element is not in the component product");
  }
  return parts;
}

Permutation PAEmbedding::phi_hat(const Permutation &f) const {
  unsigned n = space.total_degree();
  std::vector<unsigned> images(n);
  for (unsigned p = 0; p < n; ++p)
    images[p] = theta[f[theta_inv[p]]];
  return Permutation(images);
}

Permutation PAEmbedding::stabilizer_formula(const Permutation &g) const {
  Permutation sig = sigma(g);
  Permutation sig_inv = sig.inverse();
  std::vector<Permutation> component_maps;
  component_maps.reserve(arity);
  for (unsigned i = 0; i < arity; ++i) {
    Permutation h_i = transversal[i] * g * transversal[sig[i]].inverse();
    component_maps.push_back(psi(h_i));
  }
  unsigned n = space.total_degree();
  std::vector<unsigned> images(n);
  for (unsigned p = 0; p < n; ++p) {
    auto tuple = space.decode(p);
    std::vector<unsigned> image_tuple(arity);
    for (unsigned i = 0; i < arity; ++i) {
      unsigned source = sig_inv[i];
      image_tuple[i] = component_maps[source][tuple[source]];
    }
    images[p] = space.encode(image_tuple);
  }
  return Permutation(images);
}

Permutation PAEmbedding::base_formula(const Permutation &x) const {
  auto parts = project(x);
  std::vector<Permutation> component_maps;
  component_maps.reserve(arity);
  for (unsigned i = 0; i < arity; ++i) {
    Permutation moved =
        transversal[i] * parts[i] * transversal[i].inverse();
    component_maps.push_back(y_action(moved));
  }
  unsigned n = space.total_degree();
  std::vector<unsigned> images(n);
  for (unsigned p = 0; p < n; ++p) {
    auto tuple = space.decode(p);
    std::vector<unsigned> image_tuple(arity);
    for (unsigned i = 0; i < arity; ++i)
      image_tuple[i] = component_maps[i][tuple[i]];
    images[p] = space.encode(image_tuple);
  }
  return Permutation(images);
}

PAEmbedding pa_embedding(const PermGroup &g,
                         const std::vector<PermGroup> &components,
                         unsigned alpha, std::uint64_t enum_cap) {
  if (components.size() < 2)
    throw HypothesisViolation("need at least two components");
  if (alpha >= g.degree())
    throw std::invalid_argument("point out of range");
  for (const auto &k : components) {
    if (k.degree() != g.degree())
      throw HypothesisViolation("component degree mismatch");
    for (const auto &gen : k.generators())
      if (!g.contains(gen))
        throw HypothesisViolation("component is not a subgroup of G");
  }

  PAEmbedding emb;
  emb.alpha = alpha;
  emb.arity = static_cast<unsigned>(components.size());
  emb.components = components;

  std::vector<Permutation> m_gens;
  for (const auto &k : components)
    for (const auto &gen : k.generators())
      m_gens.push_back(gen);
  if (m_gens.empty())
    throw HypothesisViolation("M is trivial");
  emb.m_group = PermGroup(m_gens);

  // Internal direct product: pairwise commuting components whose orders
  // multiply to |M|.
  for (unsigned i = 0; i < emb.arity; ++i)
    for (unsigned j = i + 1; j < emb.arity; ++j)
      for (const auto &a : components[i].generators())
        for (const auto &b : components[j].generators())
          if (a * b != b * a)
            throw HypothesisViolation("components do not commute");
  std::uint64_t product_order = 1;
  for (const auto &k : components)
    product_order *= k.order();
  if (product_order != emb.m_group.order())
    throw HypothesisViolation("M is not the direct product of the components");

  if (!emb.m_group.is_transitive())
    throw HypothesisViolation("M is not transitive");
  for (const auto &gg : g.generators())
    for (const auto &mm : emb.m_group.generators())
      if (!emb.m_group.contains(conjugate(mm, gg)))
        throw HypothesisViolation("M is not normal in G");

  emb.stabilizer = g.point_stabilizer(alpha);

  // Transversal g_i by breadth-first scan over stabiliser generators.
  {
    emb.transversal.assign(emb.arity, Permutation());
    std::vector<bool> reached(emb.arity, false);
    emb.transversal[0] = Permutation::identity(g.degree());
    reached[0] = true;
    std::vector<unsigned> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      unsigned i = queue[qi];
      for (const auto &gen : emb.stabilizer.generators()) {
        Permutation sig = emb.sigma(gen);
        unsigned j = sig[i];
        if (!reached[j]) {
          reached[j] = true;
          emb.transversal[j] = emb.transversal[i] * gen;
          queue.push_back(j);
        }
      }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
      throw HypothesisViolation(
          "stabiliser does not permute the components transitively");
  }

  // M_alpha and its projections.
  PermGroup m_alpha = emb.m_group.point_stabilizer(alpha);
  std::vector<std::vector<Permutation>> projections(emb.arity);
  if (!m_alpha.is_trivial()) {
    PAEmbedding decomposer_view; // projection needs components only
    decomposer_view.arity = emb.arity;
    decomposer_view.components = components;
    for (const auto &gen : m_alpha.generators()) {
      auto parts = decomposer_view.project(gen);
      for (unsigned i = 0; i < emb.arity; ++i)
        if (!parts[i].is_identity())
          projections[i].push_back(parts[i]);
    }
  }
  std::uint64_t r_order_product = 1;
  std::vector<PermGroup> r_groups;
  for (unsigned i = 0; i < emb.arity; ++i) {
    r_groups.push_back(projections[i].empty() ? PermGroup(g.degree())
                                              : PermGroup(projections[i]));
    r_order_product *= r_groups.back().order();
  }
  if (r_order_product != m_alpha.order())
    throw HypothesisViolation(
        "M_alpha is not the product of its component projections");
  emb.projection_stab = r_groups[0];

  // Y: right cosets of R_1 in K_1, gamma the identity coset first.
  auto k_elements = components[0].elements(enum_cap);
  std::sort(k_elements.begin(), k_elements.end());
  std::vector<Permutation> reps;
  std::map<Permutation, unsigned> coset_of;
  {
    Permutation id = Permutation::identity(g.degree());
    reps.push_back(id);
    for (const auto &r : emb.projection_stab.elements(enum_cap))
      coset_of[r] = 0;
    for (const auto &e : k_elements) {
      if (coset_of.count(e))
        continue;
      unsigned y = static_cast<unsigned>(reps.size());
      reps.push_back(e);
      for (const auto &r : emb.projection_stab.elements(enum_cap))
        coset_of[r * e] = y;
    }
  }
  emb.coset_reps = reps;
  emb.gamma = 0;
  emb.space = ProductActionSpace{static_cast<unsigned>(reps.size()), emb.arity};

  // Faithfulness of the coset action.
  {
    std::vector<Permutation> y_gens;
    for (const auto &gen : components[0].generators()) {
      Permutation p = emb.y_action(gen);
      if (!p.is_identity())
        y_gens.push_back(p);
    }
    emb.component_on_y = y_gens.empty()
                             ? PermGroup(emb.space.base_degree)
                             : PermGroup(y_gens);
    if (emb.component_on_y.order() != components[0].order())
      throw HypothesisViolation(
          "the component does not act faithfully on the cosets of R_1");
  }

  // theta from the base-group action: theta(alpha^x) = gamma-tuple^phi(x).
  {
    unsigned n = g.degree();
    unsigned total = emb.space.total_degree();
    if (total != n)
      throw HypothesisViolation("|Y|^m does not match the degree");
    emb.theta.assign(n, total);
    emb.theta_inv.assign(total, n);
    for (const auto &x : emb.m_group.elements(enum_cap)) {
      unsigned omega = x[alpha];
      auto parts = emb.project(x);
      std::vector<unsigned> tuple(emb.arity);
      for (unsigned i = 0; i < emb.arity; ++i)
        tuple[i] = emb.y_of_element(
            emb.transversal[i] * parts[i] * emb.transversal[i].inverse());
      unsigned encoded = emb.space.encode(tuple);
      if (emb.theta[omega] != total && emb.theta[omega] != encoded)
        throw HypothesisViolation("theta is not well defined");
      emb.theta[omega] = encoded;
    }
    for (unsigned p = 0; p < n; ++p) {
      if (emb.theta[p] == total)
        throw HypothesisViolation("theta does not cover the point set");
      if (emb.theta_inv[emb.theta[p]] != n)
        throw HypothesisViolation("theta is not injective");
      emb.theta_inv[emb.theta[p]] = p;
    }
    if (emb.theta[alpha] != emb.space.encode(std::vector<unsigned>(emb.arity, emb.gamma)))
      throw std::logic_error("theta(alpha) is not the diagonal gamma tuple");
  }

  // Verify the two action formulas on generators.
  for (const auto &gen : emb.stabilizer.generators())
    if (emb.phi_hat(gen) != emb.stabilizer_formula(gen))
      throw std::logic_error("stabiliser action formula failed on a generator");
  for (const auto &gen : emb.m_group.generators())
    if (emb.phi_hat(gen) != emb.base_formula(gen))
      throw std::logic_error("base action formula failed on a generator");

  return emb;
}

} // namespace permbox

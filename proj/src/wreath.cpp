#include "permbox/wreath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "permbox/errors.hpp"

namespace permbox {

unsigned ProductActionSpace::total_degree() const {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < arity; ++i)
    total *= base_degree;
  return static_cast<unsigned>(total);
}

std::vector<unsigned> ProductActionSpace::decode(unsigned point) const {
  std::vector<unsigned> tuple(arity);
  for (unsigned i = arity; i-- > 0;) {
    tuple[i] = point % base_degree;
    point /= base_degree;
  }
  return tuple;
}

unsigned ProductActionSpace::encode(const std::vector<unsigned> &tuple) const {
  unsigned point = 0;
  for (unsigned i = 0; i < arity; ++i)
    point = point * base_degree + tuple[i];
  return point;
}

std::vector<unsigned> ProductActionSpace::fibre(unsigned point,
                                                unsigned coord) const {
  auto tuple = decode(point);
  std::vector<unsigned> out;
  out.reserve(base_degree);
  for (unsigned y = 0; y < base_degree; ++y) {
    tuple[coord] = y;
    out.push_back(encode(tuple));
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned ProductActionSpace::fibre_id(unsigned point, unsigned coord) const {
  auto tuple = decode(point);
  unsigned rank = 0;
  for (unsigned i = 0; i < arity; ++i) {
    if (i == coord)
      continue;
    rank = rank * base_degree + tuple[i];
  }
  unsigned per_coord = total_degree() / base_degree;
  return coord * per_coord + rank;
}

unsigned ProductActionSpace::fibre_count() const {
  return arity * (total_degree() / base_degree);
}

unsigned ProductActionSpace::fibre_image(unsigned fibre,
                                         const Permutation &g) const {
  unsigned per_coord = total_degree() / base_degree;
  unsigned coord = fibre / per_coord;
  unsigned rank = fibre % per_coord;
  std::vector<unsigned> tuple(arity);
  for (unsigned i = arity; i-- > 0;) {
    if (i == coord) {
      tuple[i] = 0;
      continue;
    }
    tuple[i] = rank % base_degree;
    rank /= base_degree;
  }
  // Map two points of the fibre; their images determine the image fibre.
  unsigned p0 = encode(tuple);
  tuple[coord] = 1;
  unsigned p1 = encode(tuple);
  auto img0 = decode(g[p0]);
  auto img1 = decode(g[p1]);
  unsigned image_coord = arity;
  for (unsigned i = 0; i < arity; ++i)
    if (img0[i] != img1[i]) {
      image_coord = i;
      break;
    }
  if (image_coord == arity)
    throw std::logic_error("fibre image collapsed");
  return fibre_id(g[p0], image_coord);
}

WreathProduct wreath_imprimitive(const PermGroup &g, const PermGroup &h) {
  if (g.degree() == 0 || h.degree() == 0)
    throw std::invalid_argument("degree 0 input");
  unsigned x = g.degree();
  unsigned m = h.degree();
  unsigned degree = x * m;

  std::vector<Permutation> gens;
  // One copy of the bottom group per block.
  for (unsigned block = 0; block < m; ++block)
    for (const auto &gg : g.generators()) {
      std::vector<unsigned> images(degree);
      for (unsigned i = 0; i < degree; ++i)
        images[i] = i;
      for (unsigned a = 0; a < x; ++a)
        images[block * x + a] = block * x + gg[a];
      Permutation p{images};
      if (!p.is_identity())
        gens.push_back(std::move(p));
    }
  // Top group permuting the blocks.
  for (const auto &hh : h.generators()) {
    std::vector<unsigned> images(degree);
    for (unsigned block = 0; block < m; ++block)
      for (unsigned a = 0; a < x; ++a)
        images[block * x + a] = hh[block] * x + a;
    Permutation p{images};
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }

  WreathProduct out{gens.empty() ? PermGroup(degree) : PermGroup(gens), g, h,
                    ProductActionSpace{x, m}, false};
  return out;
}

WreathProduct wreath_product_action(const PermGroup &g, const PermGroup &h,
                                    std::uint64_t degree_cap) {
  if (g.degree() == 0 || h.degree() == 0)
    throw std::invalid_argument("degree 0 input");
  unsigned x = g.degree();
  unsigned m = h.degree();
  std::uint64_t degree64 = 1;
  for (unsigned i = 0; i < m; ++i) {
    degree64 *= x;
    if (degree64 > degree_cap)
      throw CapExceeded("product action degree exceeds cap " +
                        std::to_string(degree_cap));
  }
  unsigned degree = static_cast<unsigned>(degree64);
  ProductActionSpace space{x, m};

  std::vector<Permutation> gens;
  // Bottom group in each coordinate.
  for (unsigned coord = 0; coord < m; ++coord)
    for (const auto &gg : g.generators()) {
      std::vector<unsigned> images(degree);
      for (unsigned p = 0; p < degree; ++p) {
        auto tuple = space.decode(p);
        tuple[coord] = gg[tuple[coord]];
        images[p] = space.encode(tuple);
      }
      Permutation perm{images};
      if (!perm.is_identity())
        gens.push_back(std::move(perm));
    }
  // Top group permuting coordinates: image coordinate i comes from
  // coordinate i^(h^-1).
  for (const auto &hh : h.generators()) {
    Permutation hinv = hh.inverse();
    std::vector<unsigned> images(degree);
    for (unsigned p = 0; p < degree; ++p) {
      auto tuple = space.decode(p);
      std::vector<unsigned> image_tuple(m);
      for (unsigned i = 0; i < m; ++i)
        image_tuple[i] = tuple[hinv[i]];
      images[p] = space.encode(image_tuple);
    }
    Permutation perm{images};
    if (!perm.is_identity())
      gens.push_back(std::move(perm));
  }

  WreathProduct out{gens.empty() ? PermGroup(degree) : PermGroup(gens), g, h,
                    space, true};
  return out;
}

bool wr_primitivity_predicate(const PermGroup &g, const PermGroup &h) {
  if (g.degree() < 2)
    return false;
  if (!g.is_transitive())
    return false;
  return is_primitive(g) && !is_regular(g) && h.is_transitive();
}

unsigned wr_product_action_sd(const PermGroup &g, const PermGroup &h) {
  if (!h.is_transitive())
    throw HypothesisViolation("wr_product_action_sd: top group intransitive");
  return h.degree() * sd(g);
}

FibrelobeReport fibrelobe_full_check_wr(const PermGroup &s,
                                        const WreathProduct &ambient,
                                        std::uint64_t enum_cap) {
  if (!ambient.product_action)
    throw HypothesisViolation("fibrelobe check requires the product action");
  if (s.degree() != ambient.group.degree())
    throw HypothesisViolation("subgroup check failed: degree mismatch");
  for (const auto &gen : s.generators())
    if (!ambient.group.contains(gen))
      throw HypothesisViolation("subgroup check failed: generator outside the ambient group");

  const ProductActionSpace &space = ambient.space;
  unsigned n = space.total_degree();
  unsigned m = space.arity;

  FibrelobeReport report;
  report.point_transitive = s.is_transitive();

  // Transitivity on the set of all fibres.
  {
    std::vector<bool> visited(space.fibre_count(), false);
    std::vector<unsigned> queue{space.fibre_id(0, 0)};
    visited[queue[0]] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &gen : s.generators()) {
        unsigned f = space.fibre_image(queue[i], gen);
        if (!visited[f]) {
          visited[f] = true;
          queue.push_back(f);
        }
      }
    report.fibrelobe_transitive =
        std::all_of(visited.begin(), visited.end(), [](bool b) { return b; });
  }

  // Induced group on the coordinate-0 fibre through point 0, identified
  // with X by that coordinate; compare with the bottom group literally.
  {
    std::vector<unsigned> fibre = space.fibre(0, 0);
    std::set<unsigned> fibre_set(fibre.begin(), fibre.end());
    std::vector<Permutation> induced_gens;
    for (const auto &elem : s.elements(enum_cap)) {
      bool stabilizes = true;
      for (unsigned p : fibre)
        if (!fibre_set.count(elem[p])) {
          stabilizes = false;
          break;
        }
      if (!stabilizes)
        continue;
      std::vector<unsigned> images(space.base_degree);
      for (unsigned p : fibre) {
        unsigned y = space.decode(p)[0];
        images[y] = space.decode(elem[p])[0];
      }
      Permutation r{images};
      if (!r.is_identity())
        induced_gens.push_back(std::move(r));
    }
    PermGroup induced = induced_gens.empty()
                            ? PermGroup(space.base_degree)
                            : PermGroup(induced_gens);
    report.induced_on_fibrelobe_matches = same_group(induced, ambient.bottom);
  }

  // Stabiliser of point 0 acting on the m fibres through it, identified
  // with coordinates; compare with the top group literally.
  {
    PermGroup stab = s.point_stabilizer(0);
    std::vector<Permutation> induced_gens;
    for (const auto &gen : stab.generators()) {
      std::vector<unsigned> images(m);
      for (unsigned coord = 0; coord < m; ++coord) {
        unsigned f = space.fibre_image(space.fibre_id(0, coord), gen);
        unsigned per_coord = n / space.base_degree;
        images[coord] = f / per_coord;
      }
      Permutation r{images};
      if (!r.is_identity())
        induced_gens.push_back(std::move(r));
    }
    PermGroup induced =
        induced_gens.empty() ? PermGroup(m) : PermGroup(induced_gens);
    report.induced_on_point_fibrelobes_matches = same_group(induced, ambient.top);
  }
  return report;
}

} // namespace permbox

#include "permbox/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "permbox/errors.hpp"

namespace permbox {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw CapExceeded("group order exceeds 64-bit range");
  return a * b;
}

std::uint64_t splitmix64(std::uint64_t &state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace

std::vector<unsigned> SuborbitReport::sizes() const {
  std::vector<unsigned> out;
  out.reserve(suborbits.size());
  for (const auto &s : suborbits)
    out.push_back(static_cast<unsigned>(s.size()));
  return out;
}

unsigned SuborbitReport::sd_value() const {
  if (!sd)
    throw HypothesisViolation("sd undefined: group is regular");
  return *sd;
}

PermGroup::PermGroup(unsigned degree) : degree_(degree), order_(1) {}

PermGroup::PermGroup(std::vector<Permutation> generators,
                     std::optional<unsigned> forced_first_base) {
  if (generators.empty())
    throw std::invalid_argument("empty generator list");
  degree_ = generators[0].degree();
  for (const auto &g : generators)
    if (g.degree() != degree_)
      throw std::invalid_argument("degree mismatch among generators");

  // Keep the supplied generators (identity and duplicates dropped).
  std::set<Permutation> seen;
  for (auto &g : generators) {
    if (g.is_identity())
      continue;
    if (seen.insert(g).second)
      generators_.push_back(std::move(g));
  }
  schreier_sims(forced_first_base);
}

void PermGroup::rebuild_level_orbit(ChainLevel &level) const {
  level.orbit_index.assign(degree_, -1);
  level.orbit.clear();
  level.transversal.clear();
  level.orbit.push_back(level.base);
  level.orbit_index[level.base] = 0;
  level.transversal.push_back(Permutation::identity(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    unsigned p = level.orbit[i];
    for (const auto &g : level.gens) {
      unsigned q = g[p];
      if (level.orbit_index[q] < 0) {
        level.orbit_index[q] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(q);
        level.transversal.push_back(level.transversal[i] * g);
      }
    }
  }
}

Permutation PermGroup::sift(const Permutation &p, std::size_t from) const {
  Permutation residue = p;
  for (std::size_t i = from; i < chain_.size(); ++i) {
    if (residue.is_identity())
      return residue;
    unsigned image = residue[chain_[i].base];
    int idx = chain_[i].orbit_index[image];
    if (idx < 0)
      return residue;
    residue = residue * chain_[i].transversal[idx].inverse();
  }
  return residue;
}

void PermGroup::close_level(std::size_t i) {
  ChainLevel &level = chain_[i];
  rebuild_level_orbit(level);
  for (std::size_t pos = 0; pos < level.orbit.size(); ++pos) {
    for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
      unsigned p = level.orbit[pos];
      const Permutation &s = level.gens[gi];
      unsigned q = s[p];
      Permutation schreier = level.transversal[pos] * s *
                             level.transversal[level.orbit_index[q]].inverse();
      Permutation residue = sift(schreier, i + 1);
      if (residue.is_identity())
        continue;
      if (chain_.size() == i + 1) {
        ChainLevel next;
        for (unsigned pt = 0; pt < degree_; ++pt)
          if (residue[pt] != pt) {
            next.base = pt;
            break;
          }
        chain_.push_back(std::move(next));
      }
      chain_[i + 1].gens.push_back(residue);
      close_level(i + 1);
    }
  }
}

void PermGroup::schreier_sims(std::optional<unsigned> forced_first_base) {
  chain_.clear();
  order_ = 1;
  if (generators_.empty())
    return;

  ChainLevel first;
  if (forced_first_base) {
    first.base = *forced_first_base;
  } else {
    first.base = degree_;
    for (unsigned pt = 0; pt < degree_ && first.base == degree_; ++pt)
      for (const auto &g : generators_)
        if (g[pt] != pt) {
          first.base = pt;
          break;
        }
  }
  first.gens = generators_;
  chain_.push_back(std::move(first));
  close_level(0);

  for (const auto &level : chain_)
    order_ = checked_mul(order_, level.orbit.size());
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    return false;
  if (p.is_identity())
    return true;
  return sift(p).is_identity();
}

std::vector<std::vector<unsigned>> PermGroup::orbits() const {
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> visited(degree_, false);
  for (unsigned start = 0; start < degree_; ++start) {
    if (visited[start])
      continue;
    std::vector<unsigned> orbit{start};
    visited[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto &g : generators_) {
        unsigned q = g[orbit[i]];
        if (!visited[q]) {
          visited[q] = true;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<unsigned> PermGroup::orbit_of(unsigned point) const {
  std::vector<unsigned> orbit{point};
  std::vector<bool> visited(degree_, false);
  visited[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto &g : generators_) {
      unsigned q = g[orbit[i]];
      if (!visited[q]) {
        visited[q] = true;
        orbit.push_back(q);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit_of(0).size() == degree_;
}

std::optional<Permutation> PermGroup::transporter(unsigned from,
                                                  unsigned to) const {
  std::vector<int> pred(degree_, -1);
  std::vector<Permutation> path(degree_);
  std::vector<unsigned> queue{from};
  path[from] = Permutation::identity(degree_);
  pred[from] = static_cast<int>(from);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    unsigned p = queue[i];
    if (p == to)
      return path[p];
    for (const auto &g : generators_) {
      unsigned q = g[p];
      if (pred[q] < 0) {
        pred[q] = static_cast<int>(p);
        path[q] = path[p] * g;
        queue.push_back(q);
      }
    }
  }
  if (from == to)
    return Permutation::identity(degree_);
  return pred[to] < 0 ? std::nullopt : std::make_optional(path[to]);
}

PermGroup PermGroup::point_stabilizer(unsigned point) const {
  if (point >= degree_)
    throw std::invalid_argument("point out of range");
  if (generators_.empty())
    return PermGroup(degree_);
  PermGroup rebased(generators_, point);
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < rebased.chain_.size(); ++i)
    for (const auto &g : rebased.chain_[i].gens)
      gens.push_back(g);
  if (gens.empty())
    return PermGroup(degree_);
  return PermGroup(std::move(gens));
}

void PermGroup::enumerate_rec(std::size_t level, const Permutation &suffix,
                              std::vector<Permutation> &out) const {
  if (level == chain_.size()) {
    out.push_back(suffix);
    return;
  }
  // Recurse deepest-first: every element factors as h * t with h in the
  // next stabiliser and t a transversal representative of this level.
  for (const auto &t : chain_[level].transversal)
    enumerate_rec(level + 1, suffix.is_identity() ? t : suffix * t, out);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap)
    throw CapExceeded("group order " + std::to_string(order_) +
                      " exceeds enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  if (chain_.empty()) {
    out.push_back(Permutation::identity(degree_));
    return out;
  }
  // Build by levels from the deepest stabiliser outwards.
  std::vector<Permutation> current{Permutation::identity(degree_)};
  for (std::size_t i = chain_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * chain_[i].transversal.size());
    for (const auto &h : current)
      for (const auto &t : chain_[i].transversal)
        next.push_back(h * t);
    current = std::move(next);
  }
  return current;
}

Permutation PermGroup::random_element(std::uint64_t &rng_state) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t i = chain_.size(); i-- > 0;) {
    std::uint64_t k = splitmix64(rng_state) % chain_[i].transversal.size();
    g = g * chain_[i].transversal[k];
  }
  return g;
}

std::vector<Permutation> PermGroup::small_generating_set() const {
  std::vector<Permutation> out;
  if (order_ == 1)
    return out;
  std::vector<const Permutation *> candidates;
  for (const auto &g : generators_)
    candidates.push_back(&g);
  for (const auto &level : chain_)
    for (const auto &g : level.gens)
      candidates.push_back(&g);
  std::uint64_t current_order = 1;
  for (const auto *cand : candidates) {
    if (current_order == order_)
      break;
    if (!out.empty() && PermGroup(out).contains(*cand))
      continue;
    if (out.empty() && cand->is_identity())
      continue;
    out.push_back(*cand);
    current_order = PermGroup(out).order();
  }
  return out;
}

PermGroup group_from_generators(const std::vector<Permutation> &gens) {
  if (gens.empty())
    throw std::invalid_argument("empty generator list");
  return PermGroup(gens);
}

bool is_semiregular(const PermGroup &g) {
  for (const auto &orbit : g.orbits())
    if (orbit.size() != g.order())
      return false;
  return true;
}

bool is_regular(const PermGroup &g) {
  return g.is_transitive() && is_semiregular(g);
}

RegularityStatus regularity_status(const PermGroup &g) {
  if (!is_semiregular(g))
    return RegularityStatus::Nonregular;
  return g.is_transitive() ? RegularityStatus::Regular
                           : RegularityStatus::SemiregularIntransitive;
}

SuborbitReport suborbits(const PermGroup &g, unsigned base_point) {
  if (!g.is_transitive())
    throw HypothesisViolation("suborbits: group is not transitive");
  if (base_point >= g.degree())
    throw std::invalid_argument("point out of range");

  PermGroup stab = g.point_stabilizer(base_point);
  auto orbits = stab.orbits();

  // Base-point suborbit first, the rest by (size, least element).
  std::stable_sort(orbits.begin(), orbits.end(),
                   [&](const auto &a, const auto &b) {
                     bool abase = std::binary_search(a.begin(), a.end(), base_point);
                     bool bbase = std::binary_search(b.begin(), b.end(), base_point);
                     if (abase != bbase)
                       return abase;
                     if (a.size() != b.size())
                       return a.size() < b.size();
                     return a[0] < b[0];
                   });

  SuborbitReport report;
  report.base_point = base_point;
  report.suborbits = orbits;

  std::vector<int> suborbit_of(g.degree(), -1);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (unsigned p : orbits[i])
      suborbit_of[p] = static_cast<int>(i);

  report.paired.resize(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    unsigned beta = orbits[i][0];
    auto t = g.transporter(base_point, beta);
    unsigned partner = t->inverse()[base_point];
    report.paired[i] = static_cast<unsigned>(suborbit_of[partner]);
  }

  std::optional<unsigned> sd;
  for (const auto &orbit : orbits)
    if (orbit.size() > 1 && (!sd || orbit.size() < *sd))
      sd = static_cast<unsigned>(orbit.size());
  report.sd = sd;
  return report;
}

unsigned sd(const PermGroup &g) { return suborbits(g, 0).sd_value(); }

namespace {

struct UnionFind {
  std::vector<unsigned> parent;
  explicit UnionFind(unsigned n) : parent(n) {
    for (unsigned i = 0; i < n; ++i)
      parent[i] = i;
  }
  unsigned find(unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (a > b)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

} // namespace

BlockSystem minimal_block_system(const PermGroup &g, unsigned a, unsigned b) {
  UnionFind uf(g.degree());
  std::queue<std::pair<unsigned, unsigned>> pending;
  pending.push({a, b});
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop();
    unsigned rx = uf.find(x), ry = uf.find(y);
    if (rx == ry)
      continue;
    uf.unite(rx, ry);
    for (const auto &gen : g.generators())
      pending.push({gen[rx], gen[ry]});
  }
  std::map<unsigned, std::vector<unsigned>> classes;
  for (unsigned p = 0; p < g.degree(); ++p)
    classes[uf.find(p)].push_back(p);
  BlockSystem system;
  for (auto &[root, block] : classes)
    system.blocks.push_back(std::move(block));
  return system;
}

bool is_primitive(const PermGroup &g, BlockSystem *witness) {
  if (g.degree() < 2)
    throw HypothesisViolation("is_primitive: degree must be at least 2");
  if (!g.is_transitive())
    throw HypothesisViolation("is_primitive: group is not transitive");

  std::optional<BlockSystem> best;
  for (unsigned beta = 1; beta < g.degree(); ++beta) {
    BlockSystem system = minimal_block_system(g, 0, beta);
    if (system.block_count() > 1 && system.block_size() > 1) {
      if (!best || system.block_size() < best->block_size())
        best = std::move(system);
    }
  }
  if (best) {
    if (witness)
      *witness = *best;
    return false;
  }
  return true;
}

bool higman_primitivity(const PermGroup &g) {
  if (!g.is_transitive())
    throw HypothesisViolation("higman_primitivity: group is not transitive");
  unsigned n = g.degree();
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = a + 1; b < n; ++b) {
      // Orbit of the unordered pair {a,b}, as an edge set.
      std::set<std::pair<unsigned, unsigned>> edges;
      std::vector<std::pair<unsigned, unsigned>> queue;
      auto norm = [](unsigned x, unsigned y) {
        return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
      };
      edges.insert(norm(a, b));
      queue.push_back(norm(a, b));
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto &gen : g.generators()) {
          auto e = norm(gen[queue[i].first], gen[queue[i].second]);
          if (edges.insert(e).second)
            queue.push_back(e);
        }
      std::vector<std::vector<unsigned>> adj(n);
      for (const auto &[u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      std::vector<bool> visited(n, false);
      std::vector<unsigned> bfs{0};
      visited[0] = true;
      for (std::size_t i = 0; i < bfs.size(); ++i)
        for (unsigned nb : adj[bfs[i]])
          if (!visited[nb]) {
            visited[nb] = true;
            bfs.push_back(nb);
          }
      if (bfs.size() != n)
        return false;
    }
  }
  return true;
}

namespace {

// Orbit labels for ordered point pairs (including the diagonal).
std::vector<int> pair_orbit_labels(const PermGroup &g, int &label_count) {
  unsigned n = g.degree();
  std::vector<int> label(static_cast<std::size_t>(n) * n, -1);
  label_count = 0;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (label[a * n + b] >= 0)
        continue;
      int id = label_count++;
      std::vector<std::pair<unsigned, unsigned>> queue{{a, b}};
      label[a * n + b] = id;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto &gen : g.generators()) {
          unsigned x = gen[queue[i].first], y = gen[queue[i].second];
          if (label[x * n + y] < 0) {
            label[x * n + y] = id;
            queue.push_back({x, y});
          }
        }
    }
  return label;
}

struct IsoSearch {
  unsigned n;
  const PermGroup &g, &h;
  const std::vector<int> &labg, &labh;
  std::vector<int> theta, used;
  std::vector<int> match_gh, match_hg;

  bool try_match(int lg, int lh, std::vector<int> &touched) {
    if (match_gh[lg] == lh)
      return true;
    if (match_gh[lg] >= 0 || match_hg[lh] >= 0)
      return false;
    match_gh[lg] = lh;
    match_hg[lh] = lg;
    touched.push_back(lg);
    return true;
  }

  void rollback(const std::vector<int> &touched) {
    for (int lg : touched) {
      match_hg[match_gh[lg]] = -1;
      match_gh[lg] = -1;
    }
  }

  bool extend(unsigned k, PermIso &result) {
    if (k == n) {
      for (const auto &gen : g.generators()) {
        std::vector<unsigned> images(n);
        for (unsigned p = 0; p < n; ++p)
          images[theta[p]] = static_cast<unsigned>(theta[gen[p]]);
        Permutation phi_g{images};
        if (!h.contains(phi_g))
          return false;
        result.generator_images.push_back(std::move(phi_g));
      }
      result.point_map.assign(theta.begin(), theta.end());
      return true;
    }
    for (unsigned cand = 0; cand < n; ++cand) {
      if (used[cand])
        continue;
      std::vector<int> touched;
      bool ok = try_match(labg[k * n + k], labh[cand * n + cand], touched);
      for (unsigned j = 0; ok && j < k; ++j) {
        ok = try_match(labg[j * n + k], labh[theta[j] * n + cand], touched) &&
             try_match(labg[k * n + j], labh[cand * n + theta[j]], touched);
      }
      if (ok) {
        theta[k] = static_cast<int>(cand);
        used[cand] = 1;
        if (extend(k + 1, result))
          return true;
        used[cand] = 0;
        theta[k] = -1;
        result.generator_images.clear();
      }
      rollback(touched);
    }
    return false;
  }
};

} // namespace

std::optional<PermIso> permutation_isomorphism(const PermGroup &g,
                                               const PermGroup &h,
                                               unsigned degree_cap) {
  if (g.degree() > degree_cap || h.degree() > degree_cap)
    throw CapExceeded("permutation_isomorphism degree cap exceeded");
  if (g.degree() != h.degree() || g.order() != h.order())
    return std::nullopt;

  auto multiset_of_orbit_sizes = [](const PermGroup &grp) {
    std::vector<std::size_t> sizes;
    for (const auto &o : grp.orbits())
      sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (multiset_of_orbit_sizes(g) != multiset_of_orbit_sizes(h))
    return std::nullopt;

  int count_g = 0, count_h = 0;
  auto labg = pair_orbit_labels(g, count_g);
  auto labh = pair_orbit_labels(h, count_h);
  if (count_g != count_h)
    return std::nullopt;

  IsoSearch search{g.degree(), g,    h,
                   labg,       labh, std::vector<int>(g.degree(), -1),
                   std::vector<int>(g.degree(), 0),
                   std::vector<int>(count_g, -1),
                   std::vector<int>(count_h, -1)};
  PermIso result;
  if (search.extend(0, result))
    return result;
  return std::nullopt;
}

PermGroup induced_action(const std::vector<Permutation> &gens,
                         const std::vector<unsigned> &points) {
  std::vector<int> index_of;
  unsigned degree = 0;
  for (unsigned p : points)
    degree = std::max(degree, p + 1);
  index_of.assign(degree, -1);
  for (std::size_t i = 0; i < points.size(); ++i)
    index_of[points[i]] = static_cast<int>(i);

  std::vector<Permutation> restricted;
  for (const auto &g : gens) {
    std::vector<unsigned> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      unsigned q = g[points[i]];
      if (q >= degree || index_of[q] < 0)
        throw std::invalid_argument("point set is not invariant");
      images[i] = static_cast<unsigned>(index_of[q]);
    }
    Permutation r{images};
    if (!r.is_identity())
      restricted.push_back(std::move(r));
  }
  if (restricted.empty())
    return PermGroup(static_cast<unsigned>(points.size()));
  return PermGroup(restricted);
}

bool same_group(const PermGroup &a, const PermGroup &b) {
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  for (const auto &g : a.generators())
    if (!b.contains(g))
      return false;
  return true;
}

} // namespace permbox

#include "permbox/cartesian.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "permbox/errors.hpp"

namespace permbox {

bool CartesianDecomposition::valid(unsigned degree) const {
  if (partitions.size() < 2)
    return false;
  std::size_t cardinality = partitions[0].size();
  if (cardinality < 2)
    return false;
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < partitions.size(); ++i)
    expected *= cardinality;
  if (expected != degree)
    return false;

  std::vector<std::vector<int>> part_of(partitions.size(),
                                        std::vector<int>(degree, -1));
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (partitions[i].size() != cardinality)
      return false;
    std::size_t covered = 0;
    for (std::size_t j = 0; j < partitions[i].size(); ++j)
      for (unsigned p : partitions[i][j]) {
        if (p >= degree || part_of[i][p] >= 0)
          return false;
        part_of[i][p] = static_cast<int>(j);
        ++covered;
      }
    if (covered != degree)
      return false;
  }
  // Transversal intersections are singletons iff the part-tuple map is
  // injective (cardinalities already match).
  std::set<std::vector<int>> tuples;
  for (unsigned p = 0; p < degree; ++p) {
    std::vector<int> tuple;
    tuple.reserve(partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i)
      tuple.push_back(part_of[i][p]);
    if (!tuples.insert(tuple).second)
      return false;
  }
  return true;
}

namespace {

std::vector<std::vector<unsigned>>
canonical_partition(std::vector<std::vector<unsigned>> parts) {
  for (auto &part : parts)
    std::sort(part.begin(), part.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::vector<std::vector<unsigned>>
apply_to_partition(const std::vector<std::vector<unsigned>> &parts,
                   const Permutation &g) {
  std::vector<std::vector<unsigned>> out;
  out.reserve(parts.size());
  for (const auto &part : parts) {
    std::vector<unsigned> image;
    image.reserve(part.size());
    for (unsigned p : part)
      image.push_back(g[p]);
    out.push_back(std::move(image));
  }
  return canonical_partition(std::move(out));
}

} // namespace

bool CartesianDecomposition::invariant_under(const PermGroup &g) const {
  std::set<std::vector<std::vector<unsigned>>> members;
  for (const auto &partition : partitions)
    members.insert(canonical_partition(partition));
  for (const auto &gen : g.generators())
    for (const auto &partition : partitions)
      if (!members.count(apply_to_partition(partition, gen)))
        return false;
  return true;
}

void CartesianDecomposition::canonicalize() {
  for (auto &partition : partitions)
    partition = canonical_partition(std::move(partition));
  std::sort(partitions.begin(), partitions.end());
}

namespace {

struct Factorization {
  unsigned root;  // l
  unsigned arity; // m
};

std::vector<Factorization> proper_power_factorizations(unsigned n) {
  std::vector<Factorization> out;
  for (unsigned l = 2; static_cast<std::uint64_t>(l) * l <= n; ++l) {
    std::uint64_t power = static_cast<std::uint64_t>(l) * l;
    unsigned m = 2;
    while (power < n) {
      power *= l;
      ++m;
    }
    if (power == n)
      out.push_back({l, m});
  }
  return out;
}

struct OrbitalGraphs {
  unsigned count = 0;
  std::vector<int> edge_orbit; // indexed a*n+b for a<b, else -1
  std::vector<std::vector<unsigned>> valency; // per orbital, per vertex
};

OrbitalGraphs unordered_pair_orbits(const PermGroup &g) {
  unsigned n = g.degree();
  OrbitalGraphs out;
  out.edge_orbit.assign(static_cast<std::size_t>(n) * n, -1);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      if (out.edge_orbit[a * n + b] >= 0)
        continue;
      int id = static_cast<int>(out.count++);
      out.valency.emplace_back(n, 0u);
      std::vector<std::pair<unsigned, unsigned>> queue{{a, b}};
      out.edge_orbit[a * n + b] = id;
      out.valency[id][a]++;
      out.valency[id][b]++;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto &gen : g.generators()) {
          unsigned x = gen[queue[i].first], y = gen[queue[i].second];
          if (x > y)
            std::swap(x, y);
          if (out.edge_orbit[x * n + y] < 0) {
            out.edge_orbit[x * n + y] = id;
            out.valency[id][x]++;
            out.valency[id][y]++;
            queue.push_back({x, y});
          }
        }
    }
  return out;
}

// Maximal cliques of an undirected graph (adjacency matrix), sizes bounded
// by expectations; plain Bron-Kerbosch without pivoting (graphs here have
// at most 64 vertices and line-sized cliques).
void bron_kerbosch(const std::vector<std::vector<bool>> &adj,
                   std::vector<unsigned> &r, std::vector<unsigned> p,
                   std::vector<unsigned> x,
                   std::vector<std::vector<unsigned>> &out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    unsigned v = p.back();
    p.pop_back();
    std::vector<unsigned> p2, x2;
    for (unsigned u : p)
      if (adj[v][u])
        p2.push_back(u);
    for (unsigned u : x)
      if (adj[v][u])
        x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    x.push_back(v);
  }
}

// Attempts to read the edge set as the distance-1 graph of an l^m grid and
// returns the coordinate partitions; empty on failure.
std::vector<std::vector<std::vector<unsigned>>>
reconstruct_grid(unsigned n, unsigned l, unsigned m,
                 const std::vector<std::vector<bool>> &adj) {
  std::vector<unsigned> all(n);
  for (unsigned i = 0; i < n; ++i)
    all[i] = i;
  std::vector<std::vector<unsigned>> cliques;
  std::vector<unsigned> r;
  bron_kerbosch(adj, r, all, {}, cliques);

  // Lines: every maximal clique has l vertices, every vertex lies in m.
  std::vector<unsigned> lines_at(n, 0);
  for (auto &clique : cliques) {
    if (clique.size() != l)
      return {};
    std::sort(clique.begin(), clique.end());
    for (unsigned v : clique)
      lines_at[v]++;
  }
  for (unsigned v = 0; v < n; ++v)
    if (lines_at[v] != m)
      return {};

  // Direction classes: connected components of the matching-adjacency
  // relation (disjoint lines whose cross edges form a perfect matching).
  auto matched = [&](const std::vector<unsigned> &a,
                     const std::vector<unsigned> &b) {
    for (unsigned u : a)
      for (unsigned v : b)
        if (u == v)
          return false;
    for (unsigned u : a) {
      unsigned count = 0;
      for (unsigned v : b)
        if (adj[u][v])
          ++count;
      if (count != 1)
        return false;
    }
    for (unsigned v : b) {
      unsigned count = 0;
      for (unsigned u : a)
        if (adj[u][v])
          ++count;
      if (count != 1)
        return false;
    }
    return true;
  };

  std::vector<int> direction(cliques.size(), -1);
  int direction_count = 0;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (direction[i] >= 0)
      continue;
    int d = direction_count++;
    std::vector<std::size_t> queue{i};
    direction[i] = d;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (std::size_t j = 0; j < cliques.size(); ++j)
        if (direction[j] < 0 && matched(cliques[queue[qi]], cliques[j])) {
          direction[j] = d;
          queue.push_back(j);
        }
  }
  if (direction_count != static_cast<int>(m))
    return {};

  // Partition for direction d: components after deleting its lines' edges.
  std::vector<std::vector<std::vector<unsigned>>> partitions;
  for (int d = 0; d < direction_count; ++d) {
    std::vector<std::vector<bool>> reduced = adj;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (direction[i] != d)
        continue;
      for (unsigned u : cliques[i])
        for (unsigned v : cliques[i]) {
          reduced[u][v] = false;
          reduced[v][u] = false;
        }
    }
    std::vector<int> component(n, -1);
    std::vector<std::vector<unsigned>> parts;
    for (unsigned start = 0; start < n; ++start) {
      if (component[start] >= 0)
        continue;
      int c = static_cast<int>(parts.size());
      std::vector<unsigned> part{start};
      component[start] = c;
      for (std::size_t i = 0; i < part.size(); ++i)
        for (unsigned v = 0; v < n; ++v)
          if (reduced[part[i]][v] && component[v] < 0) {
            component[v] = c;
            part.push_back(v);
          }
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
    partitions.push_back(canonical_partition(std::move(parts)));
  }
  return partitions;
}

} // namespace

std::vector<CartesianDecomposition>
find_cartesian_decompositions(const PermGroup &g, unsigned degree_cap) {
  unsigned n = g.degree();
  if (n > degree_cap)
    throw CapExceeded("cartesian decomposition degree cap exceeded");

  std::vector<CartesianDecomposition> out;
  std::set<std::vector<std::vector<std::vector<unsigned>>>> seen;
  if (n < 4)
    return out;

  OrbitalGraphs orbitals = unordered_pair_orbits(g);

  for (const auto &[l, m] : proper_power_factorizations(n)) {
    unsigned target = m * (l - 1);

    // Enumerate subsets of orbitals whose valencies sum to `target` at
    // every vertex, with a budget against степень-zero pathologies.
    std::vector<unsigned> chosen;
    std::vector<unsigned> acc(n, 0);
    std::uint64_t budget = 2000000;

    std::function<void(unsigned)> scan = [&](unsigned next) {
      if (budget-- == 0)
        throw CapExceeded("cartesian decomposition search budget exceeded");
      bool complete = true;
      for (unsigned v = 0; v < n; ++v)
        if (acc[v] != target) {
          complete = false;
          break;
        }
      if (complete) {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (unsigned a = 0; a < n; ++a)
          for (unsigned b = a + 1; b < n; ++b) {
            int id = orbitals.edge_orbit[a * n + b];
            if (id >= 0 &&
                std::binary_search(chosen.begin(), chosen.end(),
                                   static_cast<unsigned>(id))) {
              adj[a][b] = true;
              adj[b][a] = true;
            }
          }
        auto partitions = reconstruct_grid(n, l, m, adj);
        if (!partitions.empty()) {
          CartesianDecomposition cand{std::move(partitions)};
          cand.canonicalize();
          if (cand.valid(n) && cand.invariant_under(g) &&
              !seen.count(cand.partitions)) {
            seen.insert(cand.partitions);
            out.push_back(std::move(cand));
          }
        }
        return;
      }
      for (unsigned id = next; id < orbitals.count; ++id) {
        bool fits = true;
        for (unsigned v = 0; v < n; ++v)
          if (acc[v] + orbitals.valency[id][v] > target) {
            fits = false;
            break;
          }
        if (!fits)
          continue;
        for (unsigned v = 0; v < n; ++v)
          acc[v] += orbitals.valency[id][v];
        chosen.push_back(id);
        scan(id + 1);
        chosen.pop_back();
        for (unsigned v = 0; v < n; ++v)
          acc[v] -= orbitals.valency[id][v];
      }
    };
    scan(0);
  }

  std::sort(out.begin(), out.end(),
            [](const CartesianDecomposition &a, const CartesianDecomposition &b) {
              return a.partitions < b.partitions;
            });
  return out;
}

} // namespace permbox

#include "permbox/conn_one.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "permbox/catalog.hpp"
#include "permbox/errors.hpp"

namespace permbox {

ConnOneDecomposition lobes_and_bcv_tree(const Graph &g) {
  if (!is_connected(g) || g.n == 0)
    throw HypothesisViolation("lobes_and_bcv_tree: graph is disconnected");

  ConnOneDecomposition out;
  out.n = g.n;

  // Hopcroft-Tarjan biconnected components with an explicit edge stack.
  auto adj = g.adjacency();
  std::vector<int> depth(g.n, -1), low(g.n, 0), parent(g.n, -1);
  std::vector<std::pair<unsigned, unsigned>> edge_stack;
  std::vector<std::set<unsigned>> components;

  std::vector<std::pair<unsigned, std::size_t>> stack{{0u, 0u}};
  depth[0] = 0;
  low[0] = 0;
  while (!stack.empty()) {
    unsigned v = stack.back().first;
    std::size_t idx = stack.back().second;
    if (idx < adj[v].size()) {
      stack.back().second++;
      unsigned to = adj[v][idx];
      if (depth[to] < 0) {
        edge_stack.push_back({v, to});
        depth[to] = depth[v] + 1;
        low[to] = depth[to];
        parent[to] = static_cast<int>(v);
        stack.push_back({to, 0});
      } else if (static_cast<int>(to) != parent[v] && depth[to] < depth[v]) {
        edge_stack.push_back({v, to});
        low[v] = std::min(low[v], depth[to]);
      }
    } else {
      stack.pop_back();
      if (stack.empty())
        break;
      unsigned p = stack.back().first;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= depth[p]) {
        // Pop the component closed by the tree edge (p, v).
        std::set<unsigned> comp;
        while (!edge_stack.empty()) {
          auto [a, b] = edge_stack.back();
          edge_stack.pop_back();
          comp.insert(a);
          comp.insert(b);
          if (a == p && b == v)
            break;
        }
        if (!comp.empty())
          components.push_back(std::move(comp));
      }
    }
  }

  if (g.n == 1)
    components.push_back({0u});

  for (auto &comp : components)
    out.lobes.emplace_back(comp.begin(), comp.end());
  std::sort(out.lobes.begin(), out.lobes.end());

  std::vector<unsigned> lobe_count(g.n, 0);
  for (const auto &lobe : out.lobes)
    for (unsigned v : lobe)
      lobe_count[v]++;
  for (unsigned v = 0; v < g.n; ++v)
    if (lobe_count[v] > 1)
      out.cut_vertices.push_back(v);

  out.bcv_tree.n = g.n + static_cast<unsigned>(out.lobes.size());
  for (unsigned li = 0; li < out.lobes.size(); ++li)
    for (unsigned v : out.lobes[li])
      out.bcv_tree.add_edge(v, g.n + li);
  out.bcv_tree.normalize();
  return out;
}

GammaGraph gamma_graph(const Graph &lambda, unsigned m, unsigned depth,
                       std::uint64_t vertex_cap) {
  if (lambda.n < 3 || !is_two_connected(lambda))
    throw HypothesisViolation(
        "gamma_graph: lobe graph must be 2-connected with at least 3 vertices");
  if (m == 0 || depth == 0)
    throw std::invalid_argument("gamma_graph: m and depth must be positive");

  GammaGraph out;
  out.root = 0;
  out.lobe_depth = depth;

  if (m == 1) {
    // Degenerate: the graph is a single copy of lambda.
    out.graph = lambda;
    std::vector<unsigned> all(lambda.n);
    for (unsigned i = 0; i < lambda.n; ++i)
      all[i] = i;
    out.lobe_registry.push_back(all);
    out.interior_vertices = all;
    return out;
  }

  Graph graph;
  graph.n = 1;
  std::vector<std::vector<unsigned>> registry;
  // Vertices created in the previous lobe layer, with the number of lobes
  // they already belong to (1 for fresh vertices, m for the seeds).
  std::vector<unsigned> frontier{0};
  std::vector<unsigned> lobes_present{0};

  for (unsigned layer = 0; layer < depth; ++layer) {
    std::vector<unsigned> next_frontier;
    for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
      unsigned v = frontier[fi];
      unsigned missing = m - lobes_present[fi];
      for (unsigned c = 0; c < missing; ++c) {
        // Attach a fresh copy of lambda at v, glued at lambda-vertex 0.
        std::vector<unsigned> lobe_vertices(lambda.n);
        lobe_vertices[0] = v;
        for (unsigned lv = 1; lv < lambda.n; ++lv) {
          if (graph.n + 1 > vertex_cap)
            throw CapExceeded("gamma_graph vertex cap exceeded");
          lobe_vertices[lv] = graph.n++;
          next_frontier.push_back(lobe_vertices[lv]);
        }
        for (const auto &[a, b] : lambda.edges)
          graph.add_edge(lobe_vertices[a], lobe_vertices[b]);
        std::sort(lobe_vertices.begin(), lobe_vertices.end());
        registry.push_back(std::move(lobe_vertices));
      }
    }
    frontier = std::move(next_frontier);
    lobes_present.assign(frontier.size(), 1);
  }

  graph.normalize();
  out.graph = std::move(graph);
  out.lobe_registry = std::move(registry);

  std::vector<unsigned> lobe_count(out.graph.n, 0);
  for (const auto &lobe : out.lobe_registry)
    for (unsigned v : lobe)
      lobe_count[v]++;
  for (unsigned v = 0; v < out.graph.n; ++v)
    if (lobe_count[v] == m)
      out.interior_vertices.push_back(v);
  return out;
}

namespace {

bool graph_iso_extend(const Graph &a, const Graph &b,
                      std::vector<int> &map, std::vector<bool> &used,
                      unsigned k) {
  if (k == a.n)
    return true;
  for (unsigned cand = 0; cand < b.n; ++cand) {
    if (used[cand])
      continue;
    bool ok = true;
    for (unsigned j = 0; j < k && ok; ++j)
      ok = a.adjacent(j, k) == b.adjacent(static_cast<unsigned>(map[j]), cand);
    if (!ok)
      continue;
    map[k] = static_cast<int>(cand);
    used[cand] = true;
    if (graph_iso_extend(a, b, map, used, k + 1))
      return true;
    used[cand] = false;
    map[k] = -1;
  }
  return false;
}

} // namespace

bool graphs_isomorphic(const Graph &a, const Graph &b) {
  if (a.n != b.n || a.edges.size() != b.edges.size())
    return false;
  auto degree_multiset = [](const Graph &g) {
    std::vector<unsigned> degs(g.n, 0);
    for (const auto &[u, v] : g.edges) {
      degs[u]++;
      degs[v]++;
    }
    std::sort(degs.begin(), degs.end());
    return degs;
  };
  if (degree_multiset(a) != degree_multiset(b))
    return false;
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  return graph_iso_extend(a, b, map, used, 0);
}

namespace {

Graph subgraph_on(const Graph &g, const std::vector<unsigned> &vertices) {
  std::map<unsigned, unsigned> index;
  for (unsigned i = 0; i < vertices.size(); ++i)
    index[vertices[i]] = i;
  Graph out;
  out.n = static_cast<unsigned>(vertices.size());
  for (const auto &[u, v] : g.edges) {
    auto iu = index.find(u), iv = index.find(v);
    if (iu != index.end() && iv != index.end())
      out.add_edge(iu->second, iv->second);
  }
  out.normalize();
  return out;
}

// A lobe sub-digraph is a directed cycle when every vertex has in- and
// out-valency exactly one and the arcs form a single cycle.
bool lobe_is_directed_cycle(const Digraph &g,
                            const std::vector<unsigned> &lobe) {
  std::map<unsigned, unsigned> next;
  std::set<unsigned> members(lobe.begin(), lobe.end());
  unsigned arc_count = 0;
  for (const auto &[u, v] : g.arcs) {
    if (!members.count(u) || !members.count(v))
      continue;
    ++arc_count;
    if (next.count(u))
      return false; // out-valency > 1
    next[u] = v;
  }
  if (arc_count != lobe.size() || next.size() != lobe.size())
    return false;
  unsigned v = lobe[0];
  for (std::size_t steps = 0; steps < lobe.size(); ++steps)
    v = next[v];
  if (v != lobe[0])
    return false;
  std::set<unsigned> visited;
  v = lobe[0];
  do {
    visited.insert(v);
    v = next[v];
  } while (v != lobe[0]);
  return visited.size() == lobe.size();
}

ConnOneVerdict
check_clauses(const std::vector<std::vector<unsigned>> &registry,
              const std::vector<PermGroup> &lobe_groups,
              const std::vector<bool> &directed_cycle_flags) {
  if (registry.empty() || lobe_groups.size() != registry.size())
    throw HypothesisViolation("lobe registry and lobe groups required");

  ConnOneVerdict out;

  out.lobes_at_least_three_vertices =
      std::all_of(registry.begin(), registry.end(),
                  [](const auto &lobe) { return lobe.size() >= 3; });

  out.lobes_pairwise_isomorphic = true;
  for (std::size_t i = 1; i < registry.size() && out.lobes_pairwise_isomorphic;
       ++i)
    out.lobes_pairwise_isomorphic =
        registry[i].size() == registry[0].size();

  out.lobe_groups_primitive = true;
  for (const auto &grp : lobe_groups) {
    bool primitive = false;
    try {
      primitive = grp.degree() >= 2 && is_primitive(grp);
    } catch (const HypothesisViolation &) {
      primitive = false; // intransitive lobe group
    }
    if (!primitive) {
      out.lobe_groups_primitive = false;
      break;
    }
  }

  out.no_directed_cycle_lobe =
      std::none_of(directed_cycle_flags.begin(), directed_cycle_flags.end(),
                   [](bool b) { return b; });

  out.verdict = out.lobes_pairwise_isomorphic &&
                out.lobes_at_least_three_vertices &&
                out.lobe_groups_primitive && out.no_directed_cycle_lobe;
  if (!out.verdict) {
    if (!out.lobes_pairwise_isomorphic)
      out.failing_clause = "lobes pairwise isomorphic";
    else if (!out.lobes_at_least_three_vertices)
      out.failing_clause = "at least three vertices";
    else if (!out.lobe_groups_primitive)
      out.failing_clause = "lobe groups primitive";
    else
      out.failing_clause = "directed cycle";
  }
  return out;
}

} // namespace

ConnOneVerdict
conn_one_primitivity_check(const std::vector<std::vector<unsigned>> &registry,
                           const std::vector<PermGroup> &lobe_groups) {
  return check_clauses(registry, lobe_groups,
                       std::vector<bool>(registry.size(), false));
}

ConnOneVerdict
conn_one_primitivity_check(const Digraph &g,
                           const std::vector<std::vector<unsigned>> &registry,
                           const std::vector<PermGroup> &lobe_groups) {
  std::vector<bool> cycles;
  cycles.reserve(registry.size());
  for (const auto &lobe : registry)
    cycles.push_back(lobe_is_directed_cycle(g, lobe));
  ConnOneVerdict out = check_clauses(registry, lobe_groups, cycles);

  // The isomorphism clause on graph shells of the lobes.
  if (out.lobes_pairwise_isomorphic && registry.size() > 1) {
    Graph sym = g.symmetrized();
    Graph first = subgraph_on(sym, registry[0]);
    for (std::size_t i = 1; i < registry.size(); ++i)
      if (!graphs_isomorphic(first, subgraph_on(sym, registry[i]))) {
        out.lobes_pairwise_isomorphic = false;
        out.verdict = false;
        out.failing_clause = "lobes pairwise isomorphic";
        break;
      }
  }
  return out;
}

PermGroup induced_lobe_action(const PermGroup &g,
                              const std::vector<unsigned> &lobe,
                              std::uint64_t enum_cap) {
  std::set<unsigned> members(lobe.begin(), lobe.end());
  std::vector<Permutation> stab_gens;
  for (const auto &elem : g.elements(enum_cap)) {
    bool stabilizes = true;
    for (unsigned v : lobe)
      if (!members.count(elem[v])) {
        stabilizes = false;
        break;
      }
    if (stabilizes)
      stab_gens.push_back(elem);
  }
  return induced_action(stab_gens, lobe);
}

PermGroup induced_lobe_set_action(
    const PermGroup &g, unsigned vertex,
    const std::vector<std::vector<unsigned>> &registry,
    std::uint64_t enum_cap) {
  std::vector<unsigned> lobes_at;
  for (unsigned li = 0; li < registry.size(); ++li)
    if (std::binary_search(registry[li].begin(), registry[li].end(), vertex))
      lobes_at.push_back(li);

  PermGroup stab = g.point_stabilizer(vertex);
  std::map<std::vector<unsigned>, unsigned> position;
  for (unsigned i = 0; i < lobes_at.size(); ++i)
    position[registry[lobes_at[i]]] = i;

  std::vector<Permutation> induced;
  for (const auto &gen : stab.generators()) {
    std::vector<unsigned> images(lobes_at.size());
    for (unsigned i = 0; i < lobes_at.size(); ++i) {
      std::vector<unsigned> image_lobe;
      for (unsigned v : registry[lobes_at[i]])
        image_lobe.push_back(gen[v]);
      std::sort(image_lobe.begin(), image_lobe.end());
      auto it = position.find(image_lobe);
      if (it == position.end())
        throw HypothesisViolation("group does not permute the registry lobes");
      images[i] = it->second;
    }
    Permutation p{images};
    if (!p.is_identity())
      induced.push_back(std::move(p));
  }
  (void)enum_cap;
  if (induced.empty())
    return PermGroup(static_cast<unsigned>(lobes_at.size()));
  return PermGroup(induced);
}

bool orbital_cartesian_check(const PermGroup &embedded,
                             const ProductActionSpace &space,
                             const PermGroup &h, unsigned gamma,
                             unsigned delta, std::uint64_t degree_cap) {
  if (!h.is_transitive() || gamma == delta)
    throw HypothesisViolation("orbital_cartesian_check: need a transitive "
                              "group and distinct base points");
  Graph gamma_orbital = orbital_graph(h, gamma, delta);

  // Orbital graph of the pair (diagonal gamma, delta in coordinate 1).
  std::vector<unsigned> gamma_tuple(space.arity, gamma);
  std::vector<unsigned> delta_tuple(space.arity, gamma);
  delta_tuple[0] = delta;
  Graph sigma = orbital_graph(embedded, space.encode(gamma_tuple),
                              space.encode(delta_tuple));

  // m-fold Cartesian power of the orbital graph of h.
  Graph power = gamma_orbital;
  for (unsigned i = 1; i < space.arity; ++i)
    power = cartesian_graph_product(power, gamma_orbital, degree_cap);

  return sigma.n == power.n && sigma.edges == power.edges;
}

bool orbital_cartesian_check(const PermGroup &h, unsigned gamma,
                             unsigned delta, unsigned m,
                             std::uint64_t degree_cap) {
  // Default embedded group: H Wr S_m in product action, which realizes the
  // fibre structure the embedding lemma produces.
  WreathProduct wr = wreath_product_action(h, symmetric_group(m), degree_cap);
  return orbital_cartesian_check(wr.group, wr.space, h, gamma, delta,
                                 degree_cap);
}

} // namespace permbox

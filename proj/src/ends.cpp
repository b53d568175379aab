#include "permbox/ends.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "permbox/errors.hpp"

namespace permbox {

std::string to_string(EndsCount verdict) {
  switch (verdict) {
  case EndsCount::Zero:
    return "Zero";
  case EndsCount::One:
    return "One";
  case EndsCount::Two:
    return "Two";
  case EndsCount::Many:
    return "Many";
  default:
    return "Unknown";
  }
}

EndsVerdict ends_estimate(const Graph &g, unsigned max_probe,
                          unsigned horizon) {
  if (g.n == 0 || !is_connected(g))
    throw HypothesisViolation("ends_estimate: graph must be connected");

  EndsVerdict out;
  out.base = center_vertex(g);
  auto dist = bfs_distances(g, out.base);
  unsigned ecc = 0;
  for (unsigned d : dist)
    ecc = std::max(ecc, d);

  if (horizon == 0)
    horizon = ecc > 0 ? ecc - 1 : 0;
  if (max_probe == 0)
    max_probe = horizon > 0 ? horizon - 1 : 0;
  if (horizon <= max_probe)
    throw HypothesisViolation("ends_estimate: horizon must exceed the probe");
  out.horizon = horizon;

  // A graph the ball swallows immediately has no room for rays.
  if (ecc < 3) {
    out.verdict = EndsCount::Zero;
    return out;
  }

  auto adj = g.adjacency();
  bool every_count_zero = true;
  for (unsigned r = 1; r <= max_probe; ++r) {
    // Components of g minus the closed ball B(base, r).
    std::vector<int> comp(g.n, -1);
    unsigned count = 0;
    for (unsigned start = 0; start < g.n; ++start) {
      if (dist[start] <= r || comp[start] >= 0)
        continue;
      int id = static_cast<int>(count);
      std::vector<unsigned> queue{start};
      comp[start] = id;
      bool reaches = dist[start] >= horizon;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (unsigned to : adj[queue[i]])
          if (dist[to] > r && comp[to] < 0) {
            comp[to] = id;
            reaches = reaches || dist[to] >= horizon;
            queue.push_back(to);
          }
      if (reaches)
        ++count;
      else
        for (unsigned v : queue)
          comp[v] = INT_MAX; // dead component, id not consumed
    }
    out.probes.emplace_back(r, count);
    if (count > 0)
      every_count_zero = false;
  }

  if (every_count_zero) {
    out.verdict = EndsCount::Zero;
    return out;
  }
  if (out.probes.size() < 2) {
    out.verdict = EndsCount::Unknown;
    return out;
  }
  unsigned last = out.probes.back().second;
  unsigned prev = out.probes[out.probes.size() - 2].second;
  if (last == prev && last == 1)
    out.verdict = EndsCount::One;
  else if (last == prev && last == 2)
    out.verdict = EndsCount::Two;
  else if (prev >= 3 && last > prev)
    out.verdict = EndsCount::Many;
  else
    out.verdict = EndsCount::Unknown;
  return out;
}

} // namespace permbox

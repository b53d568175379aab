#ifndef PERMBOX_ENDS_HPP
#define PERMBOX_ENDS_HPP

#include <string>
#include <vector>

#include "permbox/graph.hpp"

namespace permbox {

enum class EndsCount { Zero, One, Two, Many, Unknown };

std::string to_string(EndsCount verdict);

/// Estimate with its probe evidence: for each probe radius, the number of
/// components of the graph minus the closed ball that still reach the
/// horizon.
struct EndsVerdict {
  EndsCount verdict = EndsCount::Unknown;
  unsigned base = 0;
  unsigned horizon = 0;
  std::vector<std::pair<unsigned, unsigned>> probes; // (radius, count)
};

// Removes balls of radius 1..max_probe around a central base vertex and
// counts components containing a vertex at distance >= horizon. Verdict
// rules: Zero when the graph dies before the horizon; One/Two when the
// last two probes agree on that count; Many when the count is >= 3 and
// still strictly growing; Unknown otherwise (never a wrong definite
// verdict). Pass 0 to derive horizon (eccentricity - 1) and max_probe
// (horizon - 1); explicit values must satisfy horizon > max_probe.
EndsVerdict ends_estimate(const Graph &g, unsigned max_probe = 0,
                          unsigned horizon = 0);

} // namespace permbox

#endif

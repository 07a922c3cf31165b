#pragma once

#include "lamalpha/hypergraph.hpp"

namespace lam {

inline constexpr int kExactSearchCap = 16;

/// Minimum number of parts such that no part fully contains an edge.
/// Exact branch-and-bound; throws resource_limit when v(G) > cap.
int chromatic_number(const Hypergraph& g, int cap = kExactSearchCap);

/// Minimum number of parts such that every part meets every edge in at most
/// one vertex.
int weak_chromatic_number(const Hypergraph& g, int cap = kExactSearchCap);

/// Clique number of a 2-graph, exact for n <= cap.
int clique_number(const Hypergraph& g, int cap = kExactSearchCap);

}  // namespace lam

#pragma once

#include "lamalpha/hypergraph.hpp"

namespace lam {

/// True iff some injective vertex map sends every edge of f onto an edge of g.
bool contains_subgraph(const Hypergraph& g, const Hypergraph& f);

/// True iff some injective vertex map is edge-preserving in both directions on
/// its image.
bool contains_induced(const Hypergraph& g, const Hypergraph& f);

/// Subgraph containment restricted to embeddings of f that use the given edge
/// of g as the image of some edge of f. Used by the enumerator's maximality
/// checks.
bool contains_subgraph_through_edge(const Hypergraph& g, const Hypergraph& f,
                                    const Edge& anchor);

}  // namespace lam

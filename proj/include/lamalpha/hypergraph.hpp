#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lam {

// Thrown when an exact search would exceed its configured cap.
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::vector<int>;  // strictly increasing vertex indices, length r

/// An r-uniform hypergraph on vertices 0..n-1. Edges are strictly sorted
/// r-tuples kept in lexicographic order without duplicates. Values are
/// immutable after construction and safe to share across threads.
struct Hypergraph {
  int r = 2;
  int n = 0;
  std::vector<Edge> edges;

  int num_vertices() const { return n; }
  int num_edges() const { return static_cast<int>(edges.size()); }

  bool has_edge(const Edge& e) const;

  /// Validates and canonicalizes: sorts vertices within each edge, sorts the
  /// edge list, rejects duplicate vertices/edges and out-of-range indices.
  static Hypergraph create(int r, int n, std::vector<Edge> edges);
};

struct DegreeProfile {
  std::vector<int> degree;
  int delta = 0;  // minimum degree
  int Delta = 0;  // maximum degree
};

DegreeProfile degree_profile(const Hypergraph& g);
bool is_regular(const Hypergraph& g);

/// True iff every unordered vertex pair lies in at least one common edge.
bool is_covering(const Hypergraph& g);

/// Replace vertex i by a block of k[i] vertices; every edge becomes the
/// complete r-partite bundle across its blocks. Blocks occupy consecutive
/// index ranges in input vertex order.
Hypergraph blow_up(const Hypergraph& g, const std::vector<int>& k);

/// Delete vertex k, drop incident edges, reindex the rest order-preservingly.
Hypergraph remove_vertex(const Hypergraph& g, int k);

Hypergraph disjoint_union(const std::vector<Hypergraph>& parts);

// Standard constructions with deterministic vertex labelings.
Hypergraph complete_graph(int r, int k);
Hypergraph fano_plane();
Hypergraph turan_graph(int n, int parts);  // complete multipartite 2-graph
/// All triples of [a+b] meeting both sides of the a|b split (the classic
/// Fano-free construction).
Hypergraph bipartition_3graph(int a, int b);

std::int64_t binomial(int n, int k);

}  // namespace lam

#pragma once

#include "lamalpha/coloring.hpp"
#include "lamalpha/containment.hpp"
#include "lamalpha/hypergraph.hpp"

namespace lam {

/// A monotone or hereditary graph property, given by forbidden (induced)
/// subgraphs or a coloring bound.
struct PropertySpec {
  enum class Mode { monotone, hereditary, chromatic_bounded, weak_chromatic_bounded };

  Mode mode = Mode::monotone;
  std::vector<Hypergraph> forbidden;  // for monotone / hereditary
  int bound = 0;                      // p or q for the coloring modes
  int r = 2;

  static PropertySpec mon(std::vector<Hypergraph> forbidden);
  static PropertySpec her(std::vector<Hypergraph> forbidden);
  static PropertySpec chromatic(int r, int p);
  static PropertySpec weak_chromatic(int r, int q);

  bool contains(const Hypergraph& g) const;

  /// Monotone-closed properties admit subtree pruning during enumeration:
  /// once a graph leaves the property no supergraph can re-enter it.
  bool is_monotone_closed() const { return mode != Mode::hereditary; }
};

}  // namespace lam

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "lamalpha/property.hpp"
#include "lamalpha/solver.hpp"

namespace lam {

struct EnumerationConfig {
  int n_cap_r2 = 8;
  int n_cap_r3 = 6;
  int n_cap_other = 5;
  /// Isomorph-free reduction; unset means "on exactly at the cap".
  std::optional<bool> canonical_reduction;
  int worker_count = 0;  // 0 = hardware concurrency
  std::uint64_t rng_seed = 1;
  bool sampled = false;       // sample random members instead of enumerating
  int sample_count = 1000;
  SolverConfig solver;

  int cap_for(int r) const {
    return r == 2 ? n_cap_r2 : r == 3 ? n_cap_r3 : n_cap_other;
  }
  bool canonical_on(int r, int n) const {
    return canonical_reduction.value_or(n >= cap_for(r));
  }
};

/// Lexicographically minimal edge set over the degree-respecting relabelings
/// (vertices may only move between labels of equal degree once labels are
/// sorted by degree). An isomorphism invariant, cheaper than full nauty-style
/// canonicalization at these sizes.
Hypergraph canonical_form(const Hypergraph& g);

/// Streams every labeled r-graph on n vertices passing the filter (pass
/// nullptr for no filter), each exactly once, in a fixed deterministic order.
/// With canonical reduction only canonical representatives are yielded.
/// Monotone-closed filters prune the search tree.
void enumerate_graphs(int r, int n, const PropertySpec* filter,
                      const EnumerationConfig& cfg,
                      const std::function<void(const Hypergraph&)>& yield);

std::uint64_t count_graphs(int r, int n, const PropertySpec* filter,
                           const EnumerationConfig& cfg);

struct ExResult {
  std::int64_t ex = 0;
  Hypergraph witness;  // lexicographically-least maximizer
};

/// ex(P,n): exact maximum edge count over the property members of order n.
ExResult ex_value(const PropertySpec& p, int n, const EnumerationConfig& cfg);

struct LambdaPropertyResult {
  double value = 0;
  Hypergraph witness;
  std::int64_t solves = 0;  // graphs actually sent to the solver
};

/// lambda^(alpha)(P,n): maximum solved lambda over the enumeration. For
/// monotone-closed properties only edge-maximal members are solved (lambda is
/// monotone under subgraphs); certified upper bounds prune the rest.
LambdaPropertyResult lambda_property(const PropertySpec& p, int n, double alpha,
                                     const EnumerationConfig& cfg);

}  // namespace lam

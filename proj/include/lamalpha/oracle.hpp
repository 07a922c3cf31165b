#pragma once

#include "lamalpha/hypergraph.hpp"

namespace lam {

struct OracleResult {
  double value = 0;           // r! * e(G(k)) / p^r, exact up to rounding
  std::vector<int> weights;   // the maximizing integer vector, sum = p
};

/// Exact rational lower bound on the Lagrangian: maximum of
/// r! * e(G(k_1,...,k_n)) / p^r over integer vectors with sum p.
/// Branch-and-bound over weak compositions; throws resource_limit when the
/// search exceeds its node cap.
OracleResult lagrangian_oracle_full(const Hypergraph& g, int p,
                                    std::int64_t node_cap = 100'000'000);

double lagrangian_oracle(const Hypergraph& g, int p,
                         std::int64_t node_cap = 100'000'000);

}  // namespace lam

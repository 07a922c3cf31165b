#pragma once

#include <map>
#include <string>
#include <vector>

#include "lamalpha/hypergraph.hpp"
#include "lamalpha/solver.hpp"

#include <nlohmann/json.hpp>

namespace lam {

/// One machine-checked inequality (an "lhs <= rhs" claim) with its slack.
/// Reports flagged not_applicable or vacuous are informational and never fail
/// a verification run.
struct BoundReport {
  std::string bound_id;
  double lhs = 0;
  double rhs = 0;
  bool satisfied = true;
  double slack = 0;  // rhs - lhs
  std::map<std::string, double> context;
  bool applicable = true;
  bool vacuous = false;
};

/// slack >= -1e-8 * max(1, |rhs|), the tolerance used by every <= check here.
bool slack_ok(double lhs, double rhs);

BoundReport make_report(std::string id, double lhs, double rhs,
                        std::map<std::string, double> context = {});

nlohmann::json to_json(const BoundReport& r);

// Prop 1: r!e/n^(r/alpha) <= lambda <= (r!e)^(1-1/alpha)
std::vector<BoundReport> check_size_bounds(const Hypergraph& g, double alpha,
                                           double lam);

// Prop 3: lambda <= (r-1)!Delta/n^(r/alpha-1) for alpha >= r (equality iff
// regular); below r only the weak form lambda < (r-1)!Delta applies.
std::vector<BoundReport> check_degree_bound(const Hypergraph& g, double alpha,
                                            double lam);

// Prop 4: equality lambda = r!e/n^(r/alpha) forces regularity; regular graphs
// attain it for alpha >= r but may exceed it below.
std::vector<BoundReport> check_regular_identity(const Hypergraph& g,
                                                double alpha, double lam);

// Lemma 1 evaluated at the minimum entry of a converged nonnegative witness.
std::vector<BoundReport> check_lemma1(const Hypergraph& g, double alpha,
                                      const SpectralResult& result);

// Lemma 2; vacuous when the min-entry premise fails.
std::vector<BoundReport> check_lemma2(const Hypergraph& g, double alpha,
                                      const SpectralResult& result);

// Theorems 5/6 for a flat property with density pi containing G.
std::vector<BoundReport> check_flat_bounds(const Hypergraph& g, double alpha,
                                           double lam, double pi);

// Theorem 8 and the order-based Corollary 3 forms.
std::vector<BoundReport> check_chromatic_bounds(const Hypergraph& g,
                                                double alpha, double lam);

// 2-graph classics at alpha = 2: Wilf, the clique-edge bound, Cvetkovic.
std::vector<BoundReport> check_2graph_classics(const Hypergraph& g, double lam);

/// Curated Turan densities for flat properties whose pi is a known theorem.
/// pi(Mon(F_7)) = 3/4; pi(C(p)) = 1 - p^(1-r); pi(weak-C(q)) = r!C(q,r)q^(-r).
double pi_fano();
double pi_chromatic(int r, int p);
double pi_weak_chromatic(int r, int q);

}  // namespace lam

#include "lamalpha/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lam {
namespace {

struct Search {
  const Hypergraph& g;
  int p;
  std::int64_t node_cap;
  std::int64_t nodes = 0;

  std::vector<int> order;                  // vertices, descending degree
  std::vector<std::vector<int>> incident;  // vertex -> edge indices
  std::vector<double> prod;                // partial product of assigned k's
  std::vector<int> unset;                  // unassigned vertices per edge
  std::vector<int> assign;                 // k value per vertex
  double best = -1;
  std::vector<int> best_assign;

  Search(const Hypergraph& g_, int p_, std::int64_t cap)
      : g(g_), p(p_), node_cap(cap) {
    auto deg = degree_profile(g).degree;
    order.resize(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    incident.assign(g.n, {});
    for (size_t j = 0; j < g.edges.size(); ++j)
      for (int v : g.edges[j]) incident[v].push_back(static_cast<int>(j));
    prod.assign(g.edges.size(), 1.0);
    unset.assign(g.edges.size(), g.r);
    assign.assign(g.n, 0);
  }

  double score() const {
    double s = 0;
    for (size_t j = 0; j < prod.size(); ++j)
      if (unset[j] == 0) s += prod[j];
    return s;
  }

  // AM-GM relaxation: the unassigned vertices of an edge share the remaining
  // budget b, so their product is at most (b/s)^s.
  double bound(double b) const {
    double total = 0;
    for (size_t j = 0; j < prod.size(); ++j) {
      if (prod[j] == 0) continue;
      int s = unset[j];
      total += s == 0 ? prod[j] : prod[j] * std::pow(b / s, s);
    }
    return total;
  }

  void record() {
    double s = score();
    if (s > best) {
      best = s;
      best_assign = assign;
    }
  }

  void dfs(int depth, int budget) {
    if (++nodes > node_cap)
      throw resource_limit("lagrangian_oracle: composition search cap exceeded");
    if (depth == g.n - 1) {
      int v = order[depth];
      assign[v] = budget;
      std::vector<double> saved;
      saved.reserve(incident[v].size());
      for (int j : incident[v]) {
        saved.push_back(prod[j]);
        prod[j] *= budget;
        --unset[j];
      }
      record();
      for (size_t t = 0; t < incident[v].size(); ++t) {
        int j = incident[v][t];
        ++unset[j];
        prod[j] = saved[t];
      }
      assign[v] = 0;
      return;
    }
    int v = order[depth];
    for (int k = budget; k >= 0; --k) {
      assign[v] = k;
      std::vector<double> saved;
      saved.reserve(incident[v].size());
      for (int j : incident[v]) {
        saved.push_back(prod[j]);
        prod[j] *= k;
        --unset[j];
      }
      if (bound(budget - k) > best) dfs(depth + 1, budget - k);
      for (size_t t = 0; t < incident[v].size(); ++t) {
        int j = incident[v][t];
        ++unset[j];
        prod[j] = saved[t];
      }
      assign[v] = 0;
    }
  }

};

}  // namespace

OracleResult lagrangian_oracle_full(const Hypergraph& g, int p,
                                    std::int64_t node_cap) {
  if (p < 1) throw std::invalid_argument("lagrangian_oracle: p must be >= 1");
  OracleResult res;
  if (g.n == 0 || g.edges.empty()) {
    res.weights.assign(g.n, 0);
    if (g.n > 0) res.weights[0] = p;
    return res;
  }
  Search s(g, p, node_cap);

  // uniform seed to anchor the pruning bound
  {
    std::vector<int> k(g.n, p / g.n);
    for (int i = 0; i < p % g.n; ++i) ++k[i];
    double val = 0;
    for (const auto& e : g.edges) {
      double pr = 1;
      for (int v : e) pr *= k[v];
      val += pr;
    }
    s.best = val;
    s.best_assign = k;
  }

  s.dfs(0, p);
  double fac = 1;
  for (int i = 2; i <= g.r; ++i) fac *= i;
  res.value = fac * s.best / std::pow(static_cast<double>(p), g.r);
  res.weights = s.best_assign;
  return res;
}

double lagrangian_oracle(const Hypergraph& g, int p, std::int64_t node_cap) {
  return lagrangian_oracle_full(g, p, node_cap).value;
}

}  // namespace lam

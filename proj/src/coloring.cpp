#include "lamalpha/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace lam {
namespace {

// Branch-and-bound over vertices in index order; try_color reports whether
// giving vertex v color c conflicts with the colors already assigned to 0..v-1.
struct ColorSearch {
  int n;
  int best;
  std::vector<int> color;

  template <typename Conflicts>
  void run(int v, int used, const Conflicts& conflicts) {
    if (used >= best) return;
    if (v == n) {
      best = used;
      return;
    }
    int limit = std::min(used + 1, best - 1);
    for (int c = 0; c < limit; ++c) {
      if (conflicts(v, c)) continue;
      color[v] = c;
      run(v + 1, std::max(used, c + 1), conflicts);
      color[v] = -1;
    }
  }

  template <typename Conflicts>
  int solve(int n_, int upper, const Conflicts& conflicts) {
    n = n_;
    best = upper + 1;
    color.assign(n, -1);
    run(0, 0, conflicts);
    return best;
  }
};

}  // namespace

int chromatic_number(const Hypergraph& g, int cap) {
  if (g.n > cap) throw resource_limit("chromatic_number: vertex cap exceeded");
  if (g.n == 0) return 0;
  if (g.edges.empty()) return 1;

  // edges grouped by their largest vertex, so conflicts are checked once
  std::vector<std::vector<const Edge*>> by_max(g.n);
  for (const auto& e : g.edges) by_max[e.back()].push_back(&e);

  // greedy first-fit upper bound
  std::vector<int> greedy(g.n, -1);
  int upper = 0;
  for (int v = 0; v < g.n; ++v) {
    for (int c = 0;; ++c) {
      bool bad = false;
      for (const Edge* e : by_max[v]) {
        bool mono = true;
        for (int u : *e)
          if (u != v && greedy[u] != c) {
            mono = false;
            break;
          }
        if (mono) {
          bad = true;
          break;
        }
      }
      if (!bad) {
        greedy[v] = c;
        upper = std::max(upper, c + 1);
        break;
      }
    }
  }

  ColorSearch s;
  auto conflicts = [&](int v, int c) {
    for (const Edge* e : by_max[v]) {
      bool mono = true;
      for (int u : *e)
        if (u != v && s.color[u] != c) {
          mono = false;
          break;
        }
      if (mono) return true;
    }
    return false;
  };
  return s.solve(g.n, upper, conflicts);
}

int weak_chromatic_number(const Hypergraph& g, int cap) {
  if (g.n > cap) throw resource_limit("weak_chromatic_number: vertex cap exceeded");
  if (g.n == 0) return 0;
  // weak coloring of G = proper coloring of its 2-section
  std::vector<std::uint32_t> adj(g.n, 0);
  for (const auto& e : g.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        adj[e[i]] |= 1u << e[j];
        adj[e[j]] |= 1u << e[i];
      }

  std::vector<int> greedy(g.n, -1);
  int upper = 0;
  for (int v = 0; v < g.n; ++v) {
    std::uint32_t taken = 0;
    for (int u = 0; u < v; ++u)
      if (adj[v] >> u & 1) taken |= 1u << greedy[u];
    int c = 0;
    while (taken >> c & 1) ++c;
    greedy[v] = c;
    upper = std::max(upper, c + 1);
  }

  ColorSearch s;
  auto conflicts = [&](int v, int c) {
    for (int u = 0; u < v; ++u)
      if ((adj[v] >> u & 1) && s.color[u] == c) return true;
    return false;
  };
  return s.solve(g.n, upper, conflicts);
}

namespace {

int max_clique(const std::vector<std::uint32_t>& adj, std::uint32_t cand,
               int size, int& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return best;
  }
  while (cand) {
    if (size + std::popcount(cand) <= best) break;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    max_clique(adj, cand & adj[v], size + 1, best);
  }
  return best;
}

}  // namespace

int clique_number(const Hypergraph& g, int cap) {
  if (g.r != 2) throw std::invalid_argument("clique_number: requires r = 2");
  if (g.n > cap) throw resource_limit("clique_number: vertex cap exceeded");
  if (g.n == 0) return 0;
  std::vector<std::uint32_t> adj(g.n, 0);
  for (const auto& e : g.edges) {
    adj[e[0]] |= 1u << e[1];
    adj[e[1]] |= 1u << e[0];
  }
  int best = 1;
  max_clique(adj, (1u << g.n) - 1, 0, best);
  return best;
}

}  // namespace lam

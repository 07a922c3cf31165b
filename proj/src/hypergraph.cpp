#include "lamalpha/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace lam {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Hypergraph Hypergraph::create(int r, int n, std::vector<Edge> es) {
  if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  for (auto& e : es) {
    if (static_cast<int>(e.size()) != r)
      throw std::invalid_argument("edge has wrong arity");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge has repeated vertex");
    if (e.front() < 0 || e.back() >= n)
      throw std::invalid_argument("edge vertex out of range");
  }
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end())
    throw std::invalid_argument("duplicate edge");
  Hypergraph g;
  g.r = r;
  g.n = n;
  g.edges = std::move(es);
  return g;
}

DegreeProfile degree_profile(const Hypergraph& g) {
  DegreeProfile p;
  p.degree.assign(g.n, 0);
  for (const auto& e : g.edges)
    for (int v : e) ++p.degree[v];
  if (g.n > 0) {
    p.delta = *std::min_element(p.degree.begin(), p.degree.end());
    p.Delta = *std::max_element(p.degree.begin(), p.degree.end());
  }
  return p;
}

bool is_regular(const Hypergraph& g) {
  auto p = degree_profile(g);
  return p.delta == p.Delta;
}

bool is_covering(const Hypergraph& g) {
  std::vector<char> covered(static_cast<size_t>(g.n) * g.n, 0);
  for (const auto& e : g.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        covered[static_cast<size_t>(e[i]) * g.n + e[j]] = 1;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!covered[static_cast<size_t>(u) * g.n + v]) return false;
  return true;
}

Hypergraph blow_up(const Hypergraph& g, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != g.n)
    throw std::invalid_argument("blow_up: weight vector length != v(G)");
  for (int ki : k)
    if (ki <= 0) throw std::invalid_argument("blow_up: weights must be >= 1");
  std::vector<int> offset(g.n + 1, 0);
  for (int i = 0; i < g.n; ++i) offset[i + 1] = offset[i] + k[i];

  std::vector<Edge> edges;
  Edge cur(g.r);
  for (const auto& e : g.edges) {
    // cartesian product over the r blocks
    std::vector<int> idx(g.r, 0);
    for (;;) {
      for (int j = 0; j < g.r; ++j) cur[j] = offset[e[j]] + idx[j];
      edges.push_back(cur);
      int j = g.r - 1;
      while (j >= 0 && ++idx[j] == k[e[j]]) idx[j--] = 0;
      if (j < 0) break;
    }
  }
  return Hypergraph::create(g.r, offset[g.n], std::move(edges));
}

Hypergraph remove_vertex(const Hypergraph& g, int k) {
  if (k < 0 || k >= g.n)
    throw std::invalid_argument("remove_vertex: vertex out of range");
  std::vector<Edge> edges;
  for (const auto& e : g.edges) {
    if (std::find(e.begin(), e.end(), k) != e.end()) continue;
    Edge f = e;
    for (int& v : f)
      if (v > k) --v;
    edges.push_back(std::move(f));
  }
  return Hypergraph::create(g.r, g.n - 1, std::move(edges));
}

Hypergraph disjoint_union(const std::vector<Hypergraph>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: empty list");
  int r = parts.front().r;
  int n = 0;
  std::vector<Edge> edges;
  for (const auto& g : parts) {
    if (g.r != r) throw std::invalid_argument("disjoint_union: mixed uniformity");
    for (const auto& e : g.edges) {
      Edge f = e;
      for (int& v : f) v += n;
      edges.push_back(std::move(f));
    }
    n += g.n;
  }
  return Hypergraph::create(r, n, std::move(edges));
}

Hypergraph complete_graph(int r, int k) {
  if (r < 2 || k < 0) throw std::invalid_argument("complete_graph: bad params");
  std::vector<Edge> edges;
  if (k >= r) {
    Edge e(r);
    std::iota(e.begin(), e.end(), 0);
    for (;;) {
      edges.push_back(e);
      int j = r - 1;
      while (j >= 0 && e[j] == k - r + j) --j;
      if (j < 0) break;
      ++e[j];
      for (int t = j + 1; t < r; ++t) e[t] = e[t - 1] + 1;
    }
  }
  return Hypergraph::create(r, k, std::move(edges));
}

Hypergraph fano_plane() {
  // The seven lines of PG(2,2) on points 0..6.
  std::vector<Edge> lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                             {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return Hypergraph::create(3, 7, std::move(lines));
}

Hypergraph turan_graph(int n, int parts) {
  if (n < 0 || parts < 1) throw std::invalid_argument("turan_graph: bad params");
  // part i gets vertices of residue class i under the balanced split
  std::vector<int> part(n);
  int pos = 0;
  for (int i = 0; i < parts; ++i) {
    int size = n / parts + (i < n % parts ? 1 : 0);
    for (int j = 0; j < size; ++j) part[pos++] = i;
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) edges.push_back({u, v});
  return Hypergraph::create(2, n, std::move(edges));
}

Hypergraph bipartition_3graph(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("bipartition_3graph: bad params");
  int n = a + b;
  auto side = [a](int v) { return v < a ? 0 : 1; };
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (side(u) != side(w)) edges.push_back({u, v, w});
  return Hypergraph::create(3, n, std::move(edges));
}

}  // namespace lam

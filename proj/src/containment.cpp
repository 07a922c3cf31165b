#include "lamalpha/containment.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace lam {
namespace {

struct Matcher {
  const Hypergraph& g;
  const Hypergraph& f;
  bool induced;
  std::vector<int> order;      // vertices of f, by descending degree
  std::vector<int> pos;        // pos[fv] = position in order
  std::vector<int> map;        // f vertex -> g vertex or -1
  std::vector<char> used;      // g vertices already taken
  std::vector<int> deg_f, deg_g;

  Matcher(const Hypergraph& g_, const Hypergraph& f_, bool induced_)
      : g(g_), f(f_), induced(induced_) {
    deg_f = degree_profile(f).degree;
    deg_g = degree_profile(g).degree;
    order.resize(f.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg_f[a] > deg_f[b]; });
    pos.assign(f.n, 0);
    for (int i = 0; i < f.n; ++i) pos[order[i]] = i;
    map.assign(f.n, -1);
    used.assign(g.n, 0);
  }

  // All f-edges whose vertices are fully mapped and that contain fv must land
  // on edges of g.
  bool edges_ok(int fv) const {
    Edge image(f.r);
    for (const auto& e : f.edges) {
      if (std::find(e.begin(), e.end(), fv) == e.end()) continue;
      bool complete = true;
      for (int i = 0; i < f.r; ++i) {
        if (map[e[i]] < 0) {
          complete = false;
          break;
        }
        image[i] = map[e[i]];
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!g.has_edge(image)) return false;
    }
    return true;
  }

  // For induced containment every g-edge inside the image must pull back to an
  // f-edge. Checked once at full assignment.
  bool induced_ok() const {
    std::vector<int> pre(g.n, -1);
    for (int v = 0; v < f.n; ++v) pre[map[v]] = v;
    Edge back(f.r);
    for (const auto& e : g.edges) {
      bool inside = true;
      for (int i = 0; i < f.r; ++i) {
        if (pre[e[i]] < 0) {
          inside = false;
          break;
        }
        back[i] = pre[e[i]];
      }
      if (!inside) continue;
      std::sort(back.begin(), back.end());
      if (!f.has_edge(back)) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == f.n) return !induced || induced_ok();
    int fv = order[depth];
    for (int gv = 0; gv < g.n; ++gv) {
      if (used[gv]) continue;
      if (!induced && deg_g[gv] < deg_f[fv]) continue;
      map[fv] = gv;
      used[gv] = 1;
      if (edges_ok(fv) && extend(depth + 1)) return true;
      used[gv] = 0;
      map[fv] = -1;
    }
    return false;
  }
};

}  // namespace

bool contains_subgraph(const Hypergraph& g, const Hypergraph& f) {
  if (g.r != f.r) throw std::invalid_argument("containment: uniformity mismatch");
  if (f.n > g.n) return false;
  if (f.num_edges() == 0) return true;  // edgeless f embeds whenever it fits
  Matcher m(g, f, /*induced=*/false);
  return m.extend(0);
}

bool contains_induced(const Hypergraph& g, const Hypergraph& f) {
  if (g.r != f.r) throw std::invalid_argument("containment: uniformity mismatch");
  if (f.n > g.n) return false;
  Matcher m(g, f, /*induced=*/true);
  return m.extend(0);
}

bool contains_subgraph_through_edge(const Hypergraph& g, const Hypergraph& f,
                                    const Edge& anchor) {
  if (g.r != f.r) throw std::invalid_argument("containment: uniformity mismatch");
  if (f.n > g.n || f.num_edges() == 0) return false;
  Edge img = anchor;
  std::sort(img.begin(), img.end());
  for (const auto& ef : f.edges) {
    Edge perm = img;
    std::sort(perm.begin(), perm.end());
    do {
      Matcher m(g, f, /*induced=*/false);
      bool ok = true;
      for (int i = 0; i < f.r && ok; ++i) {
        m.map[ef[i]] = perm[i];
        m.used[perm[i]] = 1;
        ok = m.edges_ok(ef[i]);
      }
      if (ok) {
        // skip already-assigned vertices while extending
        std::vector<int> rest;
        for (int v : m.order)
          if (m.map[v] < 0) rest.push_back(v);
        // rebuild order: mapped first (already consistent), then the rest
        std::vector<int> order2;
        for (int v : ef) order2.push_back(v);
        for (int v : rest) order2.push_back(v);
        m.order = order2;
        if (m.extend(f.r)) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace lam

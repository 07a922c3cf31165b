#include "lamalpha/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace lam {
namespace {

std::vector<Edge> edge_universe(int r, int n) {
  std::vector<Edge> all;
  if (n < r) return all;
  Edge e(r);
  std::iota(e.begin(), e.end(), 0);
  for (;;) {
    all.push_back(e);
    int j = r - 1;
    while (j >= 0 && e[j] == n - r + j) --j;
    if (j < 0) break;
    ++e[j];
    for (int t = j + 1; t < r; ++t) e[t] = e[t - 1] + 1;
  }
  return all;
}

// lex order on sorted edge-index sequences, e.g. {0,5} < {1,2}
bool lex_less_edges(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Does adding `e` keep the graph inside a monotone-closed property?
bool still_inside(Hypergraph& cur, const PropertySpec& p, const Edge& e) {
  switch (p.mode) {
    case PropertySpec::Mode::monotone:
      for (const auto& f : p.forbidden)
        if (contains_subgraph_through_edge(cur, f, e)) return false;
      return true;
    case PropertySpec::Mode::chromatic_bounded:
      return chromatic_number(cur) <= p.bound;
    case PropertySpec::Mode::weak_chromatic_bounded:
      return weak_chromatic_number(cur) <= p.bound;
    case PropertySpec::Mode::hereditary:
      return true;  // not monotone-closed; filtered at the leaves instead
  }
  return true;
}

struct Dfs {
  const std::vector<Edge>& universe;
  const PropertySpec* filter;
  Hypergraph cur;
  std::uint64_t mask = 0;
  std::function<void(Dfs&)> leaf;

  Dfs(int r, int n, const std::vector<Edge>& u, const PropertySpec* f)
      : universe(u), filter(f) {
    cur.r = r;
    cur.n = n;
  }

  bool member() const {
    return filter == nullptr ||
           (filter->mode == PropertySpec::Mode::hereditary
                ? filter->contains(cur)
                : true);
  }

  // Is some excluded edge still addable? Early exit makes the common
  // (non-maximal) case cheap.
  bool is_maximal() {
    for (size_t i = 0; i < universe.size(); ++i) {
      if (mask >> i & 1) continue;
      const Edge& e = universe[i];
      auto pos = std::lower_bound(cur.edges.begin(), cur.edges.end(), e);
      pos = cur.edges.insert(pos, e);
      bool addable = filter == nullptr || still_inside(cur, *filter, e);
      cur.edges.erase(pos);
      if (addable) return false;
    }
    return true;
  }

  void run(size_t idx) {
    if (idx == universe.size()) {
      leaf(*this);
      return;
    }
    run(idx + 1);  // exclude
    cur.edges.push_back(universe[idx]);
    mask |= 1ull << idx;
    bool ok = filter == nullptr || filter->mode == PropertySpec::Mode::hereditary ||
              still_inside(cur, *filter, universe[idx]);
    if (ok) run(idx + 1);
    mask &= ~(1ull << idx);
    cur.edges.pop_back();
  }
};

void check_caps(int r, int n, const EnumerationConfig& cfg) {
  if (n > cfg.cap_for(r))
    throw resource_limit("enumeration: exhaustive cap exceeded for this r");
  if (n >= r && binomial(n, r) > 62)
    throw resource_limit("enumeration: edge universe exceeds 62 bits");
}

// Relabelings restricted so that label l always receives a vertex of the
// l-th largest degree; the lex-least mapped edge set over that family is an
// isomorphism invariant because the family itself only depends on the degree
// multiset.
struct CanonSearch {
  const Hypergraph& g;
  std::vector<int> deg;
  std::vector<int> target;  // degree required at each label, descending
  std::vector<int> perm;
  std::vector<char> used;
  std::vector<Edge> best;
  bool strictly_smaller_found = false;
  bool stop_at_first_smaller;

  CanonSearch(const Hypergraph& g_, const std::vector<int>& deg_,
              bool stop_at_first)
      : g(g_), deg(deg_), stop_at_first_smaller(stop_at_first) {
    target = deg;
    std::sort(target.begin(), target.end(), std::greater<int>());
    perm.assign(g.n, -1);
    used.assign(g.n, 0);
    if (stop_at_first_smaller)
      best = g.edges;  // only "is anything smaller than g" matters
    else
      best.assign(g.edges.size(), Edge(g.r, g.n));  // lex above any real set
  }

  void apply_and_compare() {
    std::vector<Edge> mapped(g.edges.size());
    for (size_t j = 0; j < g.edges.size(); ++j) {
      Edge e = g.edges[j];
      for (int& v : e) v = perm[v];
      std::sort(e.begin(), e.end());
      mapped[j] = std::move(e);
    }
    std::sort(mapped.begin(), mapped.end());
    if (lex_less_edges(mapped, best)) {
      best = std::move(mapped);
      strictly_smaller_found = true;
    }
  }

  void assign(int v) {
    if (strictly_smaller_found && stop_at_first_smaller) return;
    if (v == g.n) {
      apply_and_compare();
      return;
    }
    for (int img = 0; img < g.n; ++img) {
      if (used[img] || target[img] != deg[v]) continue;
      perm[v] = img;
      used[img] = 1;
      assign(v + 1);
      used[img] = 0;
      perm[v] = -1;
      if (strictly_smaller_found && stop_at_first_smaller) return;
    }
  }
};

bool is_canonical(const Hypergraph& g) {
  auto deg = degree_profile(g).degree;
  // the canonical representative always carries a nonincreasing degree
  // sequence (labels receive vertices in degree order), so anything else can
  // be rejected before searching
  for (size_t i = 1; i < deg.size(); ++i)
    if (deg[i] > deg[i - 1]) return false;
  CanonSearch s(g, deg, /*stop_at_first=*/true);
  s.assign(0);
  return !s.strictly_smaller_found;
}

}  // namespace

Hypergraph canonical_form(const Hypergraph& g) {
  auto deg = degree_profile(g).degree;
  CanonSearch s(g, deg, /*stop_at_first=*/false);
  s.assign(0);
  return Hypergraph::create(g.r, g.n, s.best);
}

void enumerate_graphs(int r, int n, const PropertySpec* filter,
                      const EnumerationConfig& cfg,
                      const std::function<void(const Hypergraph&)>& yield) {
  if (cfg.sampled) {
    auto universe = edge_universe(r, n);
    std::mt19937_64 rng(cfg.rng_seed);
    for (int s = 0; s < cfg.sample_count; ++s) {
      std::vector<Edge> edges;
      for (const auto& e : universe)
        if (rng() & 1) edges.push_back(e);
      Hypergraph g = Hypergraph::create(r, n, std::move(edges));
      if (filter == nullptr || filter->contains(g)) yield(g);
    }
    return;
  }
  check_caps(r, n, cfg);
  auto universe = edge_universe(r, n);
  const bool canon = cfg.canonical_on(r, n);
  Dfs dfs(r, n, universe, filter);
  dfs.leaf = [&](Dfs& d) {
    if (!d.member()) return;
    if (canon && !is_canonical(d.cur)) return;
    yield(d.cur);
  };
  dfs.run(0);
}

std::uint64_t count_graphs(int r, int n, const PropertySpec* filter,
                           const EnumerationConfig& cfg) {
  std::uint64_t count = 0;
  enumerate_graphs(r, n, filter, cfg, [&](const Hypergraph&) { ++count; });
  return count;
}

ExResult ex_value(const PropertySpec& p, int n, const EnumerationConfig& cfg) {
  check_caps(p.r, n, cfg);
  auto universe = edge_universe(p.r, n);
  ExResult best;
  best.witness = Hypergraph::create(p.r, n, {});
  best.ex = -1;
  Dfs dfs(p.r, n, universe, &p);
  dfs.leaf = [&](Dfs& d) {
    if (!d.member()) return;
    auto e = static_cast<std::int64_t>(d.cur.edges.size());
    if (e > best.ex ||
        (e == best.ex && lex_less_edges(d.cur.edges, best.witness.edges))) {
      best.ex = e;
      best.witness = d.cur;
    }
  };
  dfs.run(0);
  return best;
}

LambdaPropertyResult lambda_property(const PropertySpec& p, int n, double alpha,
                                     const EnumerationConfig& cfg) {
  check_caps(p.r, n, cfg);
  auto universe = edge_universe(p.r, n);
  const bool canon = cfg.canonical_on(p.r, n);
  const bool maximal_only = p.is_monotone_closed();

  std::vector<std::uint64_t> candidates;
  Dfs dfs(p.r, n, universe, &p);
  dfs.leaf = [&](Dfs& d) {
    if (!d.member()) return;
    if (maximal_only && !d.is_maximal()) return;
    if (canon && !is_canonical(d.cur)) return;
    candidates.push_back(d.mask);
  };
  dfs.run(0);

  auto build = [&](std::uint64_t mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) edges.push_back(universe[i]);
    return Hypergraph::create(p.r, n, std::move(edges));
  };

  const double rfac = [&] {
    double f = 1;
    for (int i = 2; i <= p.r; ++i) f *= i;
    return f;
  }();

  std::vector<double> values(candidates.size(),
                             -std::numeric_limits<double>::infinity());
  std::atomic<size_t> next{0};
  std::atomic<double> incumbent{-std::numeric_limits<double>::infinity()};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= candidates.size()) break;
      Hypergraph g = build(candidates[i]);
      if (alpha > 1) {
        // Prop 1 certified upper bound; a strictly dominated graph can never
        // become the reported maximum, so skipping is schedule-independent
        double ub = std::pow(rfac * g.num_edges(), 1.0 - 1.0 / alpha);
        if (ub < incumbent.load()) continue;
      }
      SpectralResult res = alpha == 1.0 ? lagrangian(g, cfg.solver)
                                        : lambda_alpha(g, alpha, cfg.solver);
      values[i] = res.value;
      double cur = incumbent.load();
      while (res.value > cur &&
             !incumbent.compare_exchange_weak(cur, res.value)) {
      }
    }
  };
  int workers = cfg.worker_count > 0
                    ? cfg.worker_count
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, 16));
  if (workers == 1 || candidates.size() < 4) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  LambdaPropertyResult best;
  best.witness = Hypergraph::create(p.r, n, {});
  best.solves = static_cast<std::int64_t>(candidates.size());
  bool have = false;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!std::isfinite(values[i])) continue;
    double eps = 1e-12 * std::max(1.0, std::abs(values[i]));
    if (!have || values[i] > best.value + eps) {
      best.value = values[i];
      best.witness = build(candidates[i]);
      have = true;
    } else if (values[i] >= best.value - eps) {
      Hypergraph w = build(candidates[i]);
      if (lex_less_edges(w.edges, best.witness.edges)) best.witness = w;
    }
  }
  if (!have) best.value = 0;  // property admits only the empty graph
  return best;
}

}  // namespace lam

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "lamalpha/bounds.hpp"
#include "lamalpha/solver.hpp"

using namespace lam;

namespace {

Hypergraph random_graph(int r, int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    if (rng() & 1) edges.push_back(idx);
    int j = r - 1;
    while (j >= 0 && idx[j] == n - r + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int t = j + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
  return Hypergraph::create(r, n, std::move(edges));
}

Eigen::MatrixXd adjacency(const Hypergraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (const auto& e : g.edges) a(e[0], e[1]) = a(e[1], e[0]) = 1.0;
  return a;
}

double closed_form(int r, int k, double alpha) {
  double rfac = 1;
  for (int i = 2; i <= r; ++i) rfac *= i;
  return rfac * double(binomial(k, r)) * std::pow(double(k), -double(r) / alpha);
}

}  // namespace

TEST_CASE("complete graphs match the closed form") {
  for (int r : {2, 3})
    for (int k : {3, 4, 5})
      for (double alpha : {1.0, 1.5, 2.0, 4.0}) {
        auto g = complete_graph(r, k);
        auto res = alpha == 1.0 ? lagrangian(g) : lambda_alpha(g, alpha);
        CHECK(res.converged);
        double want = closed_form(r, k, alpha);
        CHECK(res.value == doctest::Approx(want).epsilon(1e-9));
        CHECK(res.residual < 1e-7);
      }
}

TEST_CASE("degenerate inputs") {
  auto empty = Hypergraph::create(2, 4, {});
  for (double alpha : {1.0, 2.0, 3.0}) {
    auto res = alpha == 1.0 ? lagrangian(empty) : lambda_alpha(empty, alpha);
    CHECK(res.value == 0.0);
    CHECK(res.converged);
  }
  auto none = Hypergraph::create(2, 0, {});
  CHECK(lambda_alpha(none, 2.0).value == 0.0);
  CHECK_THROWS(lambda_alpha(complete_graph(2, 3), 0.5));
}

TEST_CASE("alpha = 2 on 2-graphs equals the adjacency spectral radius") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + int(rng() % 10);
    auto g = random_graph(2, n, rng);
    auto res = lambda_alpha(g, 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g));
    double want = es.eigenvalues().maxCoeff();
    CHECK(res.value == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("lambda_min on 2-graphs equals the smallest eigenvalue") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + int(rng() % 7);
    auto g = random_graph(2, n, rng);
    auto res = lambda_min_alpha(g, 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency(g));
    double want = es.eigenvalues().minCoeff();
    CHECK(res.value == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("odd uniformity: minimum is minus the maximum") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_graph(3, 6, rng);
    for (double alpha : {1.5, 2.0, 3.0}) {
      auto mx = lambda_alpha(g, alpha);
      auto mn = lambda_min_alpha(g, alpha);
      CHECK(mn.value == doctest::Approx(-mx.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("witness is feasible and value matches the polyform") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    int r = 2 + int(rng() % 2);
    auto g = random_graph(r, r + 3, rng);
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
      auto res = alpha == 1.0 ? lagrangian(g) : lambda_alpha(g, alpha);
      if (g.num_edges() == 0) continue;
      CHECK(lp_norm(res.witness, alpha) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(res.witness.minCoeff() >= 0.0);
      CHECK(eval_polyform(g, res.witness) ==
            doctest::Approx(res.value).epsilon(1e-9));
      CHECK(eequ_residual(g, alpha, res.witness, res.value) ==
            doctest::Approx(res.residual));
    }
  }
}

TEST_CASE("lagrangian textbook values") {
  // K4 with isolated vertices keeps lambda^(1) = 3/4
  for (int n : {4, 6}) {
    auto edges = complete_graph(2, 4).edges;
    auto g = Hypergraph::create(2, n, edges);
    CHECK(lagrangian(g).value == doctest::Approx(0.75).epsilon(1e-9));
  }
  // a single r-edge gives r!/r^r
  auto edge3 = Hypergraph::create(3, 5, {{0, 1, 2}});
  CHECK(lagrangian(edge3).value == doctest::Approx(6.0 / 27.0).epsilon(1e-9));
}

TEST_CASE("solver is deterministic for a fixed seed") {
  std::mt19937_64 rng(113);
  auto g = random_graph(3, 6, rng);
  SolverConfig cfg;
  cfg.rng_seed = 42;
  auto a = lambda_alpha(g, 1.7, cfg);
  auto b = lambda_alpha(g, 1.7, cfg);
  CHECK(a.value == b.value);
  CHECK((a.witness - b.witness).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("alpha sweep monotonicities") {
  std::vector<double> grid{1.0, 1.25, 1.5, 2.0, 3.0, 8.0, 64.0};
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 6; ++trial) {
    int r = 2 + int(rng() % 2);
    auto g = random_graph(r, r + 3, rng);
    if (g.num_edges() == 0) continue;
    auto rows = alpha_sweep(g, grid);
    double rfe = g.num_edges();
    for (int i = 2; i <= r; ++i) rfe *= i;
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].converged);
      CHECK(rows[i].lambda <= rfe + 1e-8);
      if (i == 0) continue;
      CHECK(rows[i].lambda >= rows[i - 1].lambda - 1e-8);
      CHECK(rows[i].h <= rows[i - 1].h + 1e-8 * std::max(1.0, rows[i - 1].h));
      CHECK(rows[i].f <= rows[i - 1].f + 1e-8);
    }
  }
}

TEST_CASE("h is constant on regular graphs, strictly decreasing otherwise") {
  auto rows = alpha_sweep(complete_graph(2, 4), {1, 2, 4, 8});
  for (const auto& row : rows) CHECK(row.h == doctest::Approx(12.0).epsilon(1e-9));

  auto path = Hypergraph::create(2, 3, {{0, 1}, {1, 2}});
  auto prows = alpha_sweep(path, {1, 2, 4, 8});
  for (size_t i = 1; i < prows.size(); ++i)
    CHECK(prows[i].h < prows[i - 1].h - 1e-6);
}

TEST_CASE("blow-up scaling") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 5; ++trial) {
    int r = 2 + int(rng() % 2);
    auto g = random_graph(r, r + 2, rng);
    if (g.num_edges() == 0) continue;
    for (int k : {2, 3})
      for (double alpha : {1.5, 2.0}) {
        auto big = blow_up(g, std::vector<int>(g.n, k));
        double want =
            std::pow(double(k), r - double(r) / alpha) * lambda_alpha(g, alpha).value;
        CHECK(lambda_alpha(big, alpha).value ==
              doctest::Approx(want).epsilon(1e-6));
      }
  }
}

TEST_CASE("size and degree bound catalogs hold on random graphs") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 12; ++trial) {
    int r = 2 + int(rng() % 2);
    auto g = random_graph(r, r + 2 + int(rng() % 3), rng);
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
      auto res = alpha == 1.0 ? lagrangian(g) : lambda_alpha(g, alpha);
      for (const auto& rep : check_size_bounds(g, alpha, res.value))
        CHECK(rep.satisfied);
      for (const auto& rep : check_degree_bound(g, alpha, res.value))
        if (rep.applicable) CHECK(rep.satisfied);
      for (const auto& rep : check_regular_identity(g, alpha, res.value))
        CHECK(rep.satisfied);
      if (alpha <= r)
        for (const auto& rep : check_lemma1(g, alpha, res))
          CHECK(rep.satisfied);
      if (alpha > 1 && alpha <= r)
        for (const auto& rep : check_lemma2(g, alpha, res))
          CHECK(rep.satisfied);
      for (const auto& rep : check_chromatic_bounds(g, alpha, res.value))
        if (!rep.vacuous) CHECK(rep.satisfied);
    }
  }
}

TEST_CASE("degree bound is tight exactly on regular graphs") {
  auto k4 = complete_graph(2, 4);
  auto res = lambda_alpha(k4, 2.0);
  auto reps = check_degree_bound(k4, 2.0, res.value);
  REQUIRE(!reps.empty());
  CHECK(reps[0].context.at("equality") == 1.0);
  CHECK(reps[0].satisfied);

  auto path = Hypergraph::create(2, 3, {{0, 1}, {1, 2}});
  auto pres = lambda_alpha(path, 2.0);
  auto preps = check_degree_bound(path, 2.0, pres.value);
  CHECK(preps[0].context.at("equality") == 0.0);
  CHECK(preps[0].satisfied);
}

TEST_CASE("classic 2-graph bounds with equality on complete graphs") {
  for (int n : {4, 5, 6}) {
    auto g = complete_graph(2, n);
    auto res = lambda_alpha(g, 2.0);
    for (const auto& rep : check_2graph_classics(g, res.value)) {
      CHECK(rep.satisfied);
      CHECK(std::abs(rep.slack) < 1e-7);  // all three are tight on K_n
    }
  }
  CHECK_THROWS(check_2graph_classics(complete_graph(3, 4), 1.0));
}

TEST_CASE("flat bounds for the Fano-free construction") {
  for (int half : {4, 5}) {
    auto b = bipartition_3graph(half, half);
    for (double alpha : {1.0, 2.0, 3.0}) {
      auto res = alpha == 1.0 ? lagrangian(b) : lambda_alpha(b, alpha);
      for (const auto& rep : check_flat_bounds(b, alpha, res.value, pi_fano()))
        CHECK(rep.satisfied);
    }
  }
  CHECK_THROWS(check_flat_bounds(complete_graph(2, 3), 2.0, 1.0, 1.5));
}

TEST_CASE("curated densities") {
  CHECK(pi_fano() == 0.75);
  CHECK(pi_chromatic(2, 2) == doctest::Approx(0.5));
  CHECK(pi_chromatic(3, 2) == doctest::Approx(0.75));
  CHECK(pi_weak_chromatic(3, 4) == doctest::Approx(6.0 * 4 / 64.0));
}

TEST_CASE("bound report json shape") {
  auto rep = make_report("demo", 1.0, 2.0, {{"n", 5.0}});
  auto j = to_json(rep);
  CHECK(j.size() == 6);
  CHECK(j.at("bound_id") == "demo");
  CHECK(j.at("satisfied") == true);
  CHECK(j.at("slack") == 1.0);
  CHECK(j.at("context").at("applicable") == 1.0);
  CHECK(j.at("context").at("vacuous") == 0.0);
  CHECK(j.at("context").at("n") == 5.0);
}

TEST_CASE("perturbation bound") {
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 6; ++trial) {
    int r = 2 + int(rng() % 2);
    auto g1 = random_graph(r, r + 3, rng);
    auto edges = g1.edges;
    if (edges.empty()) continue;
    edges.pop_back();  // differ in one edge
    auto g2 = Hypergraph::create(r, g1.n, edges);
    double rfac = r == 2 ? 2 : 6;
    for (double alpha : {1.5, 2.0, 3.0}) {
      double d = std::abs(lambda_alpha(g1, alpha).value -
                          lambda_alpha(g2, alpha).value);
      CHECK(d <= std::pow(rfac, 1.0 - 1.0 / alpha) + 1e-8);
    }
  }
}

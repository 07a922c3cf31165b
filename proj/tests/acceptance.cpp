// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lamalpha/bounds.hpp"
#include "lamalpha/enumerate.hpp"
#include "lamalpha/io.hpp"
#include "lamalpha/oracle.hpp"
#include "lamalpha/sequences.hpp"
#include "lamalpha/solver.hpp"

using namespace lam;

namespace {

int failures = 0;

void criterion(int num, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  std::printf("Criterion %2d: %s  %s (%.1fs)%s%s\n", num,
              ok ? "PASS" : "FAIL", label.c_str(), secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

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

double solve(const Hypergraph& g, double alpha) {
  return alpha == 1.0 ? lagrangian(g).value : lambda_alpha(g, alpha).value;
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

int main() {
  criterion(1, "closed form on complete graphs", [](std::string& detail) {
    for (int r : {2, 3})
      for (int k : {3, 4, 5, 6})
        for (double alpha : {1.0, 1.5, 2.0, 3.0, 8.0}) {
          double rfac = r == 2 ? 2 : 6;
          double want = rfac * double(binomial(k, r)) *
                        std::pow(double(k), -double(r) / alpha);
          double got = solve(complete_graph(r, k), alpha);
          if (std::abs(got - want) > 1e-8 * std::abs(want)) {
            detail = "r=" + std::to_string(r) + " k=" + std::to_string(k) +
                     " alpha=" + std::to_string(alpha);
            return false;
          }
        }
    return true;
  });

  criterion(2, "dense eigensolver agreement at alpha=2", [](std::string& detail) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
      int n = 2 + int(rng() % 11);
      auto g = random_graph(2, n, rng);
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
      for (const auto& e : g.edges) a(e[0], e[1]) = a(e[1], e[0]) = 1.0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
      double want = es.eigenvalues().maxCoeff();
      double got = lambda_alpha(g, 2.0).value;
      if (std::abs(got - want) > 1e-7) {
        detail = "trial " + std::to_string(trial);
        return false;
      }
    }
    return true;
  });

  criterion(3, "Lagrangian reference values", [](std::string& detail) {
    EnumerationConfig cfg;
    auto mon = PropertySpec::mon({complete_graph(2, 3)});
    for (int n = 4; n <= 7; ++n) {
      double got = lambda_property(mon, n, 1.0, cfg).value;
      if (std::abs(got - 0.5) > 1e-6) {
        detail = "Mon(K_3) n=" + std::to_string(n);
        return false;
      }
    }
    for (int n = 5; n <= 8; ++n) {
      auto g = Hypergraph::create(2, n, complete_graph(2, 4).edges);
      double got = lagrangian(g).value;
      if (std::abs(got - 0.75) > 1e-6) {
        detail = "K_4 plus isolated, n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(4, "oracle dominance and convergence", [](std::string& detail) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
      int r = 2 + trial % 2;
      int n = r + 2 + int(rng() % (8 - r - 1));
      auto g = random_graph(r, n, rng);
      double exact = lagrangian(g).value;
      double prev = -1;
      for (int p : {6, 12, 24}) {
        double v = lagrangian_oracle(g, p);
        if (v < prev - 1e-12 || v > exact + 1e-9) {
          detail = "trial " + std::to_string(trial) + " p=" + std::to_string(p);
          return false;
        }
        prev = v;
      }
    }
    return true;
  });

  criterion(5, "blow-up scaling", [](std::string& detail) {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 20; ++trial) {
      int r = 2 + trial % 2;
      int n = r + 1 + int(rng() % (6 - r));
      auto g = random_graph(r, n, rng);
      if (g.num_edges() == 0) continue;
      for (int k : {2, 3})
        for (double alpha : {1.5, 2.0, double(r)}) {
          auto big = blow_up(g, std::vector<int>(n, k));
          double base = solve(g, alpha);
          double want = std::pow(double(k), r - double(r) / alpha) * base;
          double got = solve(big, alpha);
          if (std::abs(got - want) > 1e-6 * std::max(1.0, want)) {
            detail = "trial " + std::to_string(trial) +
                     " k=" + std::to_string(k) + " alpha=" + std::to_string(alpha);
            return false;
          }
        }
    }
    return true;
  });

  criterion(6, "monotonicity in alpha (lambda, h, f)", [](std::string& detail) {
    std::vector<double> grid{1, 1.25, 1.5, 2, 3, 8, 64};
    std::mt19937_64 rng(606);
    bool saw_strict_h = false;
    for (int trial = 0; trial < 20; ++trial) {
      int r = 2 + trial % 2;
      auto g = random_graph(r, r + 2 + int(rng() % 3), rng);
      if (g.num_edges() == 0) continue;
      auto rows = alpha_sweep(g, grid);
      for (size_t i = 1; i < rows.size(); ++i) {
        double tol = 1e-8 * std::max(1.0, std::abs(rows[i - 1].lambda));
        if (rows[i].lambda < rows[i - 1].lambda - tol ||
            rows[i].h > rows[i - 1].h + 1e-8 * std::max(1.0, rows[i - 1].h) ||
            rows[i].f > rows[i - 1].f + 1e-8) {
          detail = "trial " + std::to_string(trial);
          return false;
        }
      }
      if (!is_regular(g) && rows.back().h < rows.front().h - 1e-6)
        saw_strict_h = true;
    }
    if (!saw_strict_h) {
      detail = "no strictly decreasing h on a non-regular witness";
      return false;
    }
    return true;
  });

  criterion(7, "Lemma 1 at converged optima + minx reduction",
            [](std::string& detail) {
    std::mt19937_64 rng(707);
    int done = 0;
    while (done < 100) {
      int r = 2 + int(rng() % 2);
      int n = r + 1 + int(rng() % (10 - r));
      auto g = random_graph(r, n, rng);
      if (g.num_edges() == 0) continue;
      for (double alpha : {1.0, 1.5, 2.0, double(r)}) {
        auto res = alpha == 1.0 ? lagrangian(g) : lambda_alpha(g, alpha);
        if (!res.converged) continue;
        for (const auto& rep : check_lemma1(g, alpha, res))
          if (!rep.satisfied) {
            detail = "instance " + std::to_string(done) +
                     " alpha=" + std::to_string(alpha);
            return false;
          }
      }
      ++done;
    }
    // r = alpha = 2 reduction: x^2 (lambda^2 + delta n - delta^2) <= delta
    auto p3 = Hypergraph::create(2, 3, {{0, 1}, {1, 2}});
    auto c5 = Hypergraph::create(2, 5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    for (const auto& g : {p3, c5}) {
      auto res = lambda_alpha(g, 2.0);
      double x = res.witness.minCoeff();
      double delta = degree_profile(g).delta;
      double lhs = x * x * (res.value * res.value + delta * g.n - delta * delta);
      if (lhs > delta + 1e-8) {
        detail = "minx reduction on n=" + std::to_string(g.n);
        return false;
      }
    }
    return true;
  });

  criterion(8, "KNS and normalized-ratio sequences", [](std::string& detail) {
    EnumerationConfig cfg;
    auto mon_k3 = PropertySpec::mon({complete_graph(2, 3)});
    auto s1 = theorem1_sequence(mon_k3, 3, 8, 1.0, cfg);
    if (!s1.kns_monotone || !s1.lambda1_nondecreasing) {
      detail = "Mon(K_3) base sequence";
      return false;
    }
    auto mon_k43 = PropertySpec::mon({complete_graph(3, 4)});
    auto s2 = theorem1_sequence(mon_k43, 4, 6, 1.0, cfg);
    if (!s2.kns_monotone || !s2.lambda1_nondecreasing) {
      detail = "Mon(K_4^(3)) base sequence";
      return false;
    }
    auto s3 = theorem1_sequence(mon_k3, 3, 8, 2.0, cfg);
    if (!s3.th1_nonincreasing) {
      detail = "Mon(K_3) alpha=2 ratio not nonincreasing";
      return false;
    }
    double last = s3.rows.back().th1_ratio;
    double hi = std::sqrt(16.0) / 7.0 + 1e-8;  // sqrt(ceil(8/2)floor(8/2))/(8-1)
    if (last < 0.5 || last > hi) {
      detail = "final ratio " + std::to_string(last);
      return false;
    }
    return true;
  });

  criterion(9, "Fano-free flat bounds", [](std::string& detail) {
    auto f7 = fano_plane();
    for (int n : {8, 10, 12}) {
      auto b = bipartition_3graph(n / 2, n - n / 2);
      if (contains_subgraph(b, f7)) {
        detail = "B_" + std::to_string(n) + " contains F_7";
        return false;
      }
      for (double alpha : {1.0, 2.0, 3.0}) {
        double got = solve(b, alpha);
        double bound = 0.75 * std::pow(double(n), 3.0 - 3.0 / alpha);
        if (got > bound + 1e-8 * std::max(1.0, bound)) {
          detail = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
          return false;
        }
      }
    }
    return true;
  });

  criterion(10, "edge perturbation bound", [](std::string& detail) {
    std::mt19937_64 rng(1010);
    for (int trial = 0; trial < 20; ++trial) {
      int r = 2 + trial % 2;
      int n = r + 2 + int(rng() % 3);
      auto g1 = random_graph(r, n, rng);
      auto edges = g1.edges;
      int k = 1 + int(rng() % 3);
      k = std::min<int>(k, int(edges.size()));
      for (int i = 0; i < k; ++i) edges.pop_back();
      if (k == 0) continue;
      auto g2 = Hypergraph::create(r, n, edges);
      double rfac = r == 2 ? 2 : 6;
      for (double alpha : {1.5, 2.0, 3.0}) {
        double d = std::abs(lambda_alpha(g1, alpha).value -
                            lambda_alpha(g2, alpha).value);
        if (d > std::pow(rfac * k, 1.0 - 1.0 / alpha) + 1e-8) {
          detail = "trial " + std::to_string(trial);
          return false;
        }
      }
    }
    return true;
  });

  criterion(11, "gradient vs finite differences", [](std::string& detail) {
    std::mt19937_64 rng(1111);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    int done = 0;
    while (done < 100) {
      int r = 2 + int(rng() % 2);
      int n = r + 1 + int(rng() % 5);
      auto g = random_graph(r, n, rng);
      if (g.num_edges() == 0) continue;
      Vector x(n);
      for (int i = 0; i < n; ++i) x[i] = u(rng);
      auto grad = polyform_gradient(g, x);
      const double h = 1e-6;
      for (int k = 0; k < n; ++k) {
        Vector xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        double fd = (eval_polyform(g, xp) - eval_polyform(g, xm)) / (2 * h);
        double an = g.r * grad[k];
        if (std::abs(fd - an) > 1e-6 * std::max(1.0, std::abs(an))) {
          detail = "instance " + std::to_string(done);
          return false;
        }
      }
      ++done;
    }
    return true;
  });

  criterion(12, "manifest replay determinism", [](std::string& detail) {
    auto shell = [](const std::string& cmd) {
      std::string full = cmd + " 2>/dev/null";
      FILE* pipe = popen(full.c_str(), "r");
      std::string out;
      if (pipe) {
        std::array<char, 4096> buf;
        size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
          out.append(buf.data(), got);
        pclose(pipe);
      }
      return out;
    };
    const std::string bin = LAM_BINARY;
    const std::string manifest = "/tmp/lam_acceptance_manifest.json";
    const std::vector<std::string> runs{
        " lambda fano --alpha 2 --json --manifest " + manifest,
        " verify complete:2:5 --json --manifest " + manifest,
        " sweep complete:2:4 --alphas 1 2 4 --json --manifest " + manifest,
        " oracle complete:2:3 --p 3 6 --json --manifest " + manifest,
    };
    for (const auto& r : runs) {
      std::string first = shell(bin + r);
      std::string again = shell(bin + " replay " + manifest);
      if (first.empty() || first != again) {
        detail = "divergence in:" + r;
        std::remove(manifest.c_str());
        return false;
      }
    }
    std::remove(manifest.c_str());
    return true;
  });

  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures;
}

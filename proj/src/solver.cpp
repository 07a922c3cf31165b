#include "lamalpha/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "lamalpha/oracle.hpp"

namespace lam {
namespace {

constexpr double kZeroTol = 1e-12;

double factorial(int r) {
  double f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t s) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (s + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Vector normalized_lp(Vector x, double alpha) {
  double nrm = lp_norm(x, alpha);
  if (nrm > 0) x /= nrm;
  return x;
}

// start 0: uniform; start 1: degree-proportional; rest: random exponential
Vector make_start(const Hypergraph& g, double alpha, int s,
                  const SolverConfig& cfg) {
  Vector x(g.n);
  if (s == 0) {
    x.setOnes();
  } else if (s == 1) {
    auto deg = degree_profile(g).degree;
    for (int i = 0; i < g.n; ++i) x[i] = deg[i] + 1e-3;
  } else {
    std::mt19937_64 rng(mix(cfg.rng_seed, s));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < g.n; ++i)
      x[i] = -std::log1p(-unif(rng) * (1 - 1e-16));
  }
  return normalized_lp(std::move(x), alpha);
}

struct IterOut {
  Vector x;
  double value = 0;
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};

double signed_residual(const Hypergraph& g, double alpha, const Vector& x,
                       double lambda) {
  Vector grad = polyform_gradient(g, x);
  double worst = 0;
  for (int k = 0; k < g.n; ++k) {
    double a = std::abs(x[k]);
    double err;
    if (a <= kZeroTol) {
      err = alpha > 1 ? std::abs(grad[k]) : 0.0;
    } else {
      double sgn = x[k] < 0 ? -1.0 : 1.0;
      err = std::abs(lambda * sgn * std::pow(a, alpha - 1) - grad[k]);
    }
    worst = std::max(worst, err);
  }
  return worst / std::max(1.0, std::abs(lambda));
}

// Shifted fixed-point iteration on the nonnegative l^alpha sphere.
IterOut fixed_point(const Hypergraph& g, double alpha, Vector x,
                    const SolverConfig& cfg, double shift) {
  IterOut out;
  const double inv = 1.0 / (alpha - 1.0);
  double best_res = std::numeric_limits<double>::infinity();
  int best_it = 0;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    Vector grad = polyform_gradient(g, x);
    double lambda = x.dot(grad);  // Euler identity: sum x_k g_k = P_G(x)
    out.residual = eequ_residual(g, alpha, x, lambda);
    out.iterations = it;
    if (out.residual <= cfg.tolerance * std::max(1.0, lambda)) {
      out.converged = true;
      break;
    }
    if (out.residual < 0.9 * best_res) {
      best_res = out.residual;
      best_it = it;
    } else if (it - best_it > 1000) {
      break;  // oscillating (happens for alpha < r); caller polishes instead
    }
    Vector y(g.n);
    for (int k = 0; k < g.n; ++k)
      y[k] = std::pow(grad[k] + shift * std::pow(x[k], alpha - 1), inv);
    double nrm = lp_norm(y, alpha);
    if (!(nrm > 0) || !y.allFinite()) break;  // stuck on a dead face
    x = y / nrm;
  }
  out.x = std::move(x);
  out.value = eval_polyform(g, out.x);
  return out;
}

// Projected gradient with backtracking on the l^alpha sphere. Handles the
// nonnegative ascent used below the alpha switch and the signed descent used
// by lambda_min.
IterOut proj_grad_sphere(const Hypergraph& g, double alpha, Vector x,
                         const SolverConfig& cfg, bool maximize, bool nonneg) {
  IterOut out;
  double fx = eval_polyform(g, x);
  double t = 1.0;
  const double dir = maximize ? 1.0 : -1.0;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    out.iterations = it;
    out.residual = nonneg ? eequ_residual(g, alpha, x, fx)
                          : signed_residual(g, alpha, x, fx);
    if (out.residual <= cfg.tolerance * std::max(1.0, std::abs(fx))) {
      out.converged = true;
      break;
    }
    Vector grad = g.r * polyform_gradient(g, x);
    // project onto the tangent space of the alpha-sphere: the raw gradient
    // can point downhill for the normalized objective when alpha != 2
    Vector w(g.n);
    for (int k = 0; k < g.n; ++k) {
      double a = std::abs(x[k]);
      w[k] = a <= kZeroTol ? 0.0
                           : (x[k] < 0 ? -1.0 : 1.0) * std::pow(a, alpha - 1);
    }
    double wn = w.squaredNorm();
    if (wn > 0) grad -= (grad.dot(w) / wn) * w;
    bool improved = false;
    t = std::min(t * 4.0, 1.0);  // let the step length recover after backtracks
    for (int ls = 0; ls < 80; ++ls) {
      Vector y = x + dir * t * grad;
      if (nonneg) y = y.cwiseMax(0.0);
      double nrm = lp_norm(y, alpha);
      if (nrm > 0) {
        y /= nrm;
        double fy = eval_polyform(g, y);
        if (maximize ? fy > fx : fy < fx) {
          x = std::move(y);
          fx = fy;
          t *= 1.5;
          improved = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!improved) {
      out.residual = nonneg ? eequ_residual(g, alpha, x, fx)
                            : signed_residual(g, alpha, x, fx);
      out.converged =
          out.residual <= cfg.tolerance * std::max(1.0, std::abs(fx));
      break;
    }
  }
  out.x = std::move(x);
  out.value = eval_polyform(g, out.x);
  return out;
}

// Baum-Eagon iteration for the Lagrangian: x_k <- x_k g_k / P(x) increases
// P_G on the simplex for forms with nonnegative coefficients.
IterOut baum_eagon(const Hypergraph& g, Vector x, const SolverConfig& cfg) {
  IterOut out;
  double stall_res = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    Vector grad = polyform_gradient(g, x);
    double p = x.dot(grad);
    out.iterations = it;
    out.residual = eequ_residual(g, 1.0, x, p);
    if (out.residual <= cfg.tolerance * std::max(1.0, p)) {
      out.converged = true;
      break;
    }
    if (!(p > 0)) break;  // no edge carries weight; this start is dead
    if (it % 512 == 0) {
      // A sublinear tail means a coordinate is sliding off the support along
      // a nearly flat direction (g_k just under P); x_k then shrinks like
      // 1/it. Cut such coordinates instead of waiting them out.
      if (out.residual > 0.25 * stall_res) {
        bool cut = false;
        for (int k = 0; k < g.n; ++k)
          if (x[k] > 0 && x[k] < 1e-3 && grad[k] < p) {
            x[k] = 0;
            cut = true;
          }
        if (cut) x /= x.sum();
      }
      stall_res = out.residual;
    }
    for (int k = 0; k < g.n; ++k) x[k] = x[k] * grad[k] / p;
    double s = x.sum();
    if (!(s > 0)) break;
    x /= s;
    // settle faces: coordinates that have decayed to noise are dropped
    bool dropped = false;
    for (int k = 0; k < g.n; ++k)
      if (x[k] > 0 && x[k] < 1e-14) {
        x[k] = 0;
        dropped = true;
      }
    if (dropped) x /= x.sum();
  }
  out.x = std::move(x);
  out.value = eval_polyform(g, out.x);
  return out;
}

bool lex_greater(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

SpectralResult multistart(const Hypergraph& g, double alpha,
                          const SolverConfig& cfg,
                          const std::function<IterOut(Vector)>& solve_one) {
  SpectralResult best;
  best.alpha = alpha;
  best.starts_used = std::max(1, cfg.num_starts);
  bool have = false;
  for (int s = 0; s < best.starts_used; ++s) {
    IterOut out = solve_one(make_start(g, alpha, s, cfg));
    double eps = 1e-12 * std::max(1.0, std::abs(out.value));
    bool better;
    if (!have) {
      better = true;
    } else if (out.value > best.value + eps) {
      better = true;
    } else if (out.value >= best.value - eps) {
      // deterministic tie-break: converged first, then lex-largest witness
      if (out.converged != best.converged)
        better = out.converged;
      else
        better = lex_greater(out.x, best.witness);
    } else {
      better = false;
    }
    if (better) {
      best.value = out.value;
      best.witness = out.x;
      best.residual = out.residual;
      best.iterations = out.iterations;
      best.converged = out.converged;
      have = true;
    }
  }
  return best;
}

SpectralResult empty_result(const Hypergraph& g, double alpha) {
  SpectralResult res;
  res.alpha = alpha;
  res.converged = true;
  res.starts_used = 1;
  res.witness = g.n > 0 ? normalized_lp(Vector::Ones(g.n), alpha)
                        : Vector(0);
  return res;
}

}  // namespace

double eequ_residual(const Hypergraph& g, double alpha, const Vector& x,
                     double lambda) {
  Vector grad = polyform_gradient(g, x);
  double worst = 0;
  for (int k = 0; k < g.n; ++k) {
    double err;
    if (x[k] <= kZeroTol) {
      // zero coordinates: stationary faces for alpha = 1 (KKT only requires
      // g_k <= lambda there); genuine violations for alpha > 1
      err = alpha > 1 ? grad[k] : std::max(0.0, grad[k] - lambda);
    } else {
      err = std::abs(lambda * std::pow(x[k], alpha - 1) - grad[k]);
    }
    worst = std::max(worst, err);
  }
  return worst / std::max(1.0, lambda);
}

SpectralResult lambda_alpha(const Hypergraph& g, double alpha,
                            const SolverConfig& cfg) {
  if (alpha < 1) throw std::invalid_argument("lambda_alpha: alpha must be >= 1");
  if (alpha == 1.0) return lagrangian(g, cfg);
  if (g.edges.empty()) return empty_result(g, alpha);
  // the plain iteration oscillates for alpha < r; monotone ascent climbs
  // into the right basin and a heavily damped fixed point contracts there
  auto damped_polish = [&](IterOut best) {
    for (double damp = 8.0; !best.converged && damp <= 1e6; damp *= 16.0) {
      IterOut next = fixed_point(g, alpha, best.x, cfg, damp);
      next.iterations += best.iterations;
      if (next.converged || next.residual < best.residual) best = std::move(next);
    }
    return best;
  };
  auto solve_one = [&](Vector x0) {
    if (alpha < cfg.alpha_switch) {
      IterOut out = proj_grad_sphere(g, alpha, std::move(x0), cfg,
                                     /*maximize=*/true, /*nonneg=*/true);
      if (out.converged || out.iterations >= cfg.max_iterations) return out;
      return damped_polish(std::move(out));
    }
    IterOut out = fixed_point(g, alpha, std::move(x0), cfg, cfg.shift);
    if (out.converged || out.iterations >= cfg.max_iterations) return out;
    IterOut climbed = proj_grad_sphere(g, alpha, std::move(out.x), cfg,
                                       /*maximize=*/true, /*nonneg=*/true);
    climbed.iterations += out.iterations;
    if (climbed.converged) return climbed;
    return damped_polish(std::move(climbed));
  };
  return multistart(g, alpha, cfg, solve_one);
}

SpectralResult lagrangian(const Hypergraph& g, const SolverConfig& cfg) {
  if (g.edges.empty()) return empty_result(g, 1.0);
  auto solve_one = [&](Vector x0) { return baum_eagon(g, std::move(x0), cfg); };
  SpectralResult res = multistart(g, 1.0, cfg, solve_one);

  // exact blow-up oracle cross-check on small graphs
  if (g.n <= 12) {
    OracleResult oracle = lagrangian_oracle_full(g, 6);
    if (oracle.value > res.value) {
      Vector x(g.n);
      for (int i = 0; i < g.n; ++i) x[i] = oracle.weights[i] / 6.0;
      IterOut refined = baum_eagon(g, std::move(x), cfg);
      if (refined.value > res.value) {
        res.value = refined.value;
        res.witness = refined.x;
        res.residual = refined.residual;
        res.iterations = refined.iterations;
        res.converged = refined.converged;
      }
    }
  }
  return res;
}

SpectralResult lambda_min_alpha(const Hypergraph& g, double alpha,
                                const SolverConfig& cfg) {
  if (alpha < 1)
    throw std::invalid_argument("lambda_min_alpha: alpha must be >= 1");
  if (alpha == 1.0)
    throw std::invalid_argument("lambda_min_alpha: requires alpha > 1");
  if (g.edges.empty()) return empty_result(g, alpha);

  if (g.r % 2 == 1) {
    // P(-x) = -P(x): the minimum is the negated maximum, exactly
    SpectralResult res = lambda_alpha(g, alpha, cfg);
    res.value = -res.value;
    res.witness = -res.witness;
    return res;
  }

  // even r: signed multistart descent with random sign patterns
  SpectralResult best;
  best.alpha = alpha;
  best.starts_used = std::max(1, cfg.num_starts);
  bool have = false;
  for (int s = 0; s < best.starts_used; ++s) {
    Vector x0 = make_start(g, alpha, s, cfg);
    if (s > 0) {
      std::mt19937_64 rng(mix(cfg.rng_seed ^ 0x5157, s));
      for (int i = 0; i < g.n; ++i)
        if (rng() & 1) x0[i] = -x0[i];
    }
    IterOut out = proj_grad_sphere(g, alpha, std::move(x0), cfg,
                                   /*maximize=*/false, /*nonneg=*/false);
    double eps = 1e-12 * std::max(1.0, std::abs(out.value));
    bool better;
    if (!have)
      better = true;
    else if (out.value < best.value - eps)
      better = true;
    else if (out.value <= best.value + eps)
      better = out.converged != best.converged ? out.converged
                                               : lex_greater(out.x, best.witness);
    else
      better = false;
    if (better) {
      best.value = out.value;
      best.witness = out.x;
      best.residual = out.residual;
      best.iterations = out.iterations;
      best.converged = out.converged;
      have = true;
    }
  }
  return best;
}

std::vector<SweepRow> alpha_sweep(const Hypergraph& g,
                                  const std::vector<double>& alphas,
                                  const SolverConfig& cfg) {
  std::vector<SweepRow> rows;
  const double re = factorial(g.r) * g.num_edges();
  for (double a : alphas) {
    SpectralResult res =
        a == 1.0 ? lagrangian(g, cfg) : lambda_alpha(g, a, cfg);
    SweepRow row;
    row.alpha = a;
    row.lambda = res.value;
    row.h = res.value * std::pow(static_cast<double>(g.n), g.r / a);
    row.f = g.num_edges() > 0 ? std::pow(res.value / re, a)
                              : std::numeric_limits<double>::quiet_NaN();
    row.converged = res.converged;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lam

#pragma once

#include <cstdint>
#include <vector>

#include "lamalpha/polyform.hpp"

namespace lam {

struct SolverConfig {
  double tolerance = 1e-10;
  int max_iterations = 100000;
  int num_starts = 32;
  std::uint64_t rng_seed = 1;
  double shift = 1.0;          // damping for the fixed-point iteration
  double alpha_switch = 1.25;  // below this, projected gradient replaces it
};

struct SpectralResult {
  double value = 0;
  Vector witness;        // feasible point achieving `value`
  double alpha = 1;
  double residual = 0;   // stationarity violation, relative to max(1, value)
  int iterations = 0;
  bool converged = false;
  int starts_used = 0;
};

/// Stationarity residual of the eigen-equation system at (x, lambda):
/// max_k |lambda x_k^(alpha-1) - partial_gradient(k)| / max(1, lambda).
/// Zero coordinates are skipped for alpha = 1 (faces are stationary there);
/// for alpha > 1 they contribute their gradient.
double eequ_residual(const Hypergraph& g, double alpha, const Vector& x,
                     double lambda);

/// lambda^(alpha)(G): maximum of P_G over the nonnegative unit l^alpha
/// sphere. Multistart; the returned value is always a certified lower bound
/// (P_G at a feasible point); converged=false flags possible sub-optimality.
SpectralResult lambda_alpha(const Hypergraph& g, double alpha,
                            const SolverConfig& cfg = {});

/// lambda^(1)(G): maximum of P_G over the standard simplex (the Lagrangian).
SpectralResult lagrangian(const Hypergraph& g, const SolverConfig& cfg = {});

/// Minimum of P_G over the signed l^alpha sphere, alpha > 1. For odd r this
/// is exactly -lambda^(alpha)(G) by the global sign flip.
SpectralResult lambda_min_alpha(const Hypergraph& g, double alpha,
                                const SolverConfig& cfg = {});

struct SweepRow {
  double alpha;
  double lambda;
  double h;  // lambda * n^(r/alpha)
  double f;  // (lambda / (r! e))^alpha, NaN when e = 0
  bool converged;
};

std::vector<SweepRow> alpha_sweep(const Hypergraph& g,
                                  const std::vector<double>& alphas,
                                  const SolverConfig& cfg = {});

}  // namespace lam

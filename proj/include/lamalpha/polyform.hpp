#pragma once

#include <Eigen/Core>

#include "lamalpha/hypergraph.hpp"

namespace lam {

using Vector = Eigen::VectorXd;

/// P_G(x) = r! * sum over edges of prod x_i, summed in edge order with
/// pairwise (compensated) summation.
double eval_polyform(const Hypergraph& g, const Vector& x);

/// (r-1)! * sum over edges containing k of prod_{i != k} x_i; equals
/// (1/r) dP_G/dx_k.
double partial_gradient(const Hypergraph& g, const Vector& x, int k);

/// All partial gradients in one pass over the edges.
Vector polyform_gradient(const Hypergraph& g, const Vector& x);

/// lp norm ||x||_alpha for alpha >= 1.
double lp_norm(const Vector& x, double alpha);

}  // namespace lam

#include "lamalpha/polyform.hpp"

#include <algorithm>
#include <cmath>

namespace lam {
namespace {

double factorial(int r) {
  double f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

// pairwise summation over [lo, hi)
double pairwise_sum(const std::vector<double>& terms, size_t lo, size_t hi) {
  size_t len = hi - lo;
  if (len == 0) return 0.0;
  if (len <= 8) {
    double s = 0;
    for (size_t i = lo; i < hi; ++i) s += terms[i];
    return s;
  }
  size_t mid = lo + len / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

}  // namespace

double eval_polyform(const Hypergraph& g, const Vector& x) {
  if (x.size() != g.n)
    throw std::invalid_argument("eval_polyform: vector length != v(G)");
  std::vector<double> terms(g.edges.size());
  for (size_t j = 0; j < g.edges.size(); ++j) {
    double p = 1;
    for (int v : g.edges[j]) p *= x[v];
    terms[j] = p;
  }
  return factorial(g.r) * pairwise_sum(terms, 0, terms.size());
}

double partial_gradient(const Hypergraph& g, const Vector& x, int k) {
  if (x.size() != g.n)
    throw std::invalid_argument("partial_gradient: vector length != v(G)");
  if (k < 0 || k >= g.n)
    throw std::invalid_argument("partial_gradient: vertex out of range");
  std::vector<double> terms;
  for (const auto& e : g.edges) {
    if (std::find(e.begin(), e.end(), k) == e.end()) continue;
    double p = 1;
    for (int v : e)
      if (v != k) p *= x[v];
    terms.push_back(p);
  }
  return factorial(g.r - 1) * pairwise_sum(terms, 0, terms.size());
}

Vector polyform_gradient(const Hypergraph& g, const Vector& x) {
  if (x.size() != g.n)
    throw std::invalid_argument("polyform_gradient: vector length != v(G)");
  Vector grad = Vector::Zero(g.n);
  const double fac = factorial(g.r - 1);
  for (const auto& e : g.edges) {
    // leave-one-out products via prefix/suffix scans
    const int r = g.r;
    double pre = 1;
    std::vector<double> suf(r + 1, 1.0);
    for (int i = r - 1; i >= 0; --i) suf[i] = suf[i + 1] * x[e[i]];
    for (int i = 0; i < r; ++i) {
      grad[e[i]] += fac * pre * suf[i + 1];
      pre *= x[e[i]];
    }
  }
  return grad;
}

double lp_norm(const Vector& x, double alpha) {
  if (alpha == 1.0) return x.cwiseAbs().sum();
  if (alpha == 2.0) return x.norm();
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    s += std::pow(std::abs(x[i]), alpha);
  return std::pow(s, 1.0 / alpha);
}

}  // namespace lam

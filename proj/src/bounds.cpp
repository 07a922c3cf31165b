#include "lamalpha/bounds.hpp"

#include <cmath>

#include "lamalpha/coloring.hpp"

namespace lam {
namespace {

constexpr double kSlackTol = 1e-8;

double factorial(int r) {
  double f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

double r_fact_e(const Hypergraph& g) { return factorial(g.r) * g.num_edges(); }

}  // namespace

bool slack_ok(double lhs, double rhs) {
  return rhs - lhs >= -kSlackTol * std::max(1.0, std::abs(rhs));
}

BoundReport make_report(std::string id, double lhs, double rhs,
                        std::map<std::string, double> context) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.satisfied = slack_ok(lhs, rhs);
  r.context = std::move(context);
  return r;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json ctx(r.context);
  ctx["applicable"] = r.applicable ? 1.0 : 0.0;
  ctx["vacuous"] = r.vacuous ? 1.0 : 0.0;
  return nlohmann::json{{"bound_id", r.bound_id}, {"lhs", r.lhs},
                        {"rhs", r.rhs},           {"satisfied", r.satisfied},
                        {"slack", r.slack},       {"context", ctx}};
}

std::vector<BoundReport> check_size_bounds(const Hypergraph& g, double alpha,
                                           double lam) {
  const double re = r_fact_e(g);
  double lower = g.num_edges() == 0
                     ? 0.0
                     : re / std::pow(static_cast<double>(g.n), g.r / alpha);
  auto lo = make_report("size-lower", lower, lam,
                        {{"alpha", alpha}, {"m", double(g.num_edges())},
                         {"n", double(g.n)}});
  double upper = std::pow(re, 1.0 - 1.0 / alpha);
  auto hi = make_report("size-upper", lam, upper,
                        {{"alpha", alpha}, {"m", double(g.num_edges())},
                         {"n", double(g.n)}});
  // Prop 1 claims strictness of the upper bound once an edge exists
  if (g.num_edges() >= 1)
    hi.context["strict"] = lam < upper - kSlackTol * std::max(1.0, upper) ? 1.0 : 0.0;
  return {lo, hi};
}

std::vector<BoundReport> check_degree_bound(const Hypergraph& g, double alpha,
                                            double lam) {
  auto prof = degree_profile(g);
  std::vector<BoundReport> out;
  if (alpha >= g.r) {
    double rhs = factorial(g.r - 1) * prof.Delta /
                 std::pow(static_cast<double>(g.n), g.r / alpha - 1.0);
    auto rep = make_report("degree-max", lam, rhs,
                           {{"alpha", alpha}, {"Delta", double(prof.Delta)},
                            {"n", double(g.n)}});
    bool equality = std::abs(rep.slack) <= kSlackTol * std::max(1.0, rhs);
    rep.context["equality"] = equality ? 1.0 : 0.0;
    rep.context["regular"] = is_regular(g) ? 1.0 : 0.0;
    // equality is claimed to characterize regular graphs
    if (equality && !is_regular(g)) rep.satisfied = false;
    out.push_back(rep);
  } else {
    auto rep = make_report("degree-max", 0.0, 0.0, {{"alpha", alpha}});
    rep.applicable = false;
    out.push_back(rep);
    if (prof.Delta >= 1) {
      out.push_back(make_report("degree-weak", lam,
                                factorial(g.r - 1) * prof.Delta,
                                {{"alpha", alpha}, {"Delta", double(prof.Delta)}}));
    }
  }
  return out;
}

std::vector<BoundReport> check_regular_identity(const Hypergraph& g,
                                                double alpha, double lam) {
  const bool regular = is_regular(g);
  double rb = g.num_edges() == 0
                  ? 0.0
                  : r_fact_e(g) / std::pow(static_cast<double>(g.n), g.r / alpha);
  bool attained = std::abs(lam - rb) <= kSlackTol * std::max(1.0, rb);
  auto rep = make_report("regular-identity", rb, lam,
                         {{"alpha", alpha}, {"regular", regular ? 1.0 : 0.0},
                          {"attained", attained ? 1.0 : 0.0}});
  if (attained && !regular) {
    rep.satisfied = false;  // equality without regularity contradicts Prop 4
  } else if (regular && alpha >= g.r) {
    rep.satisfied = attained;
  } else if (regular) {
    rep.vacuous = true;  // below r regular graphs may legitimately exceed rb
  }
  return {rep};
}

std::vector<BoundReport> check_lemma1(const Hypergraph& g, double alpha,
                                      const SpectralResult& result) {
  if (alpha < 1.0 || alpha > g.r)
    throw std::invalid_argument("check_lemma1: requires 1 <= alpha <= r");
  double nrm = lp_norm(result.witness, alpha);
  if (std::abs(nrm - 1.0) > 1e-6)
    throw std::invalid_argument("check_lemma1: witness not normalized");
  const auto prof = degree_profile(g);
  const double delta = prof.delta;
  const double lam = result.value;
  const double x = result.witness.minCoeff();
  const int n = g.n;
  const int r = g.r;
  const double xar1 = std::pow(x, alpha * (r - 1));
  double lhs = (std::pow(lam * std::pow(double(n), double(r) / alpha - 1.0) /
                             factorial(r - 1),
                         alpha) -
                std::pow(delta, alpha)) *
               xar1;
  double rhs = double(binomial(n - 1, r - 1)) * std::pow(delta, alpha - 1.0) *
               (std::pow(1.0 - std::pow(x, alpha), r - 1) /
                    std::pow(double(n - 1), r - 1) -
                xar1);
  auto rep = make_report("lemma1", lhs, rhs,
                         {{"alpha", alpha}, {"delta", delta},
                          {"min_entry", x}, {"n", double(n)}});
  return {rep};
}

std::vector<BoundReport> check_lemma2(const Hypergraph& g, double alpha,
                                      const SpectralResult& result) {
  if (alpha <= 1.0 || alpha > g.r)
    throw std::invalid_argument("check_lemma2: requires 1 < alpha <= r");
  const auto prof = degree_profile(g);
  const int n = g.n;
  const int r = g.r;
  const double x = result.witness.minCoeff();
  const double logn = std::log(double(n));
  const double premise_rhs = 1.0 / n * (1.0 - 1.0 / ((alpha - 1.0) * logn));
  bool premise = std::pow(x, alpha) >= premise_rhs;
  double lhs = result.value * std::pow(double(n), double(r) / alpha - 1.0) /
               factorial(r - 1);
  double rhs = prof.delta + 2.0 * r / (alpha * (alpha - 1.0) * logn) *
                                double(binomial(n - 1, r - 1));
  auto rep = make_report("lemma2", lhs, rhs,
                         {{"alpha", alpha}, {"delta", double(prof.delta)},
                          {"min_entry", x}, {"n", double(n)},
                          {"premise", premise ? 1.0 : 0.0}});
  if (!premise) {
    rep.vacuous = true;
    rep.satisfied = true;
  }
  return {rep};
}

std::vector<BoundReport> check_flat_bounds(const Hypergraph& g, double alpha,
                                           double lam, double pi) {
  if (pi < 0.0 || pi > 1.0)
    throw std::invalid_argument("check_flat_bounds: pi outside [0,1]");
  const double re = r_fact_e(g);
  std::map<std::string, double> ctx{
      {"alpha", alpha}, {"pi", pi}, {"m", double(g.num_edges())},
      {"n", double(g.n)}};
  std::vector<BoundReport> out;
  out.push_back(make_report("flat-size", double(g.num_edges()),
                            pi * std::pow(double(g.n), g.r) / factorial(g.r),
                            ctx));
  out.push_back(make_report("flat-edges", lam,
                            std::pow(pi, 1.0 / alpha) *
                                std::pow(re, 1.0 - 1.0 / alpha),
                            ctx));
  out.push_back(make_report("flat-order", lam,
                            pi * std::pow(double(g.n), g.r - double(g.r) / alpha),
                            ctx));
  return out;
}

std::vector<BoundReport> check_chromatic_bounds(const Hypergraph& g,
                                                double alpha, double lam) {
  const double re = r_fact_e(g);
  const int chi = chromatic_number(g);
  const int wchi = weak_chromatic_number(g);
  std::map<std::string, double> ctx{{"alpha", alpha}, {"chi", double(chi)},
                                    {"weak_chi", double(wchi)},
                                    {"m", double(g.num_edges())},
                                    {"n", double(g.n)}};
  std::vector<BoundReport> out;
  if (g.num_edges() == 0) {
    auto rep = make_report("chromatic-edges", lam, 0.0, ctx);
    rep.vacuous = true;
    out.push_back(rep);
    return out;
  }
  out.push_back(make_report(
      "chromatic-edges", lam,
      std::pow(1.0 - std::pow(double(chi), -(g.r - 1.0)), 1.0 / alpha) *
          std::pow(re, 1.0 - 1.0 / alpha),
      ctx));
  out.push_back(make_report(
      "weak-chromatic-edges", lam,
      factorial(g.r) * std::pow(double(binomial(wchi, g.r)), 1.0 / alpha) *
          std::pow(double(wchi), -double(g.r) / alpha) *
          std::pow(double(g.num_edges()), 1.0 - 1.0 / alpha),
      ctx));
  // Corollary 3 order-based forms (chi <= n/(r-1), weak chi <= n)
  out.push_back(make_report(
      "order-edges", lam,
      std::pow(1.0 - std::pow(double(g.n) / (g.r - 1.0), -(g.r - 1.0)),
               1.0 / alpha) *
          std::pow(re, 1.0 - 1.0 / alpha),
      ctx));
  out.push_back(make_report(
      "order-size", lam,
      factorial(g.r) * std::pow(double(binomial(g.n, g.r)), 1.0 / alpha) *
          std::pow(double(g.n), -double(g.r) / alpha) *
          std::pow(double(g.num_edges()), 1.0 - 1.0 / alpha),
      ctx));
  return out;
}

std::vector<BoundReport> check_2graph_classics(const Hypergraph& g, double lam) {
  if (g.r != 2)
    throw std::invalid_argument("check_2graph_classics: requires r = 2");
  const int omega = clique_number(g);
  const int chi = chromatic_number(g);
  const double m = g.num_edges();
  std::map<std::string, double> ctx{{"omega", double(omega)},
                                    {"chi", double(chi)},
                                    {"m", m},
                                    {"n", double(g.n)}};
  std::vector<BoundReport> out;
  out.push_back(
      make_report("wilf", lam, (omega - 1.0) / omega * g.n, ctx));
  out.push_back(make_report("clique-edge", lam,
                            std::sqrt(2.0 * (omega - 1.0) / omega * m), ctx));
  out.push_back(
      make_report("cvetkovic", lam, (chi - 1.0) / chi * g.n, ctx));
  return out;
}

double pi_fano() { return 0.75; }

double pi_chromatic(int r, int p) {
  return 1.0 - std::pow(double(p), -(r - 1.0));
}

double pi_weak_chromatic(int r, int q) {
  double f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f * double(binomial(q, r)) * std::pow(double(q), -double(r));
}

}  // namespace lam

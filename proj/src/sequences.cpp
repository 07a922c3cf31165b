#include "lamalpha/sequences.hpp"

#include <cmath>
#include <cstdio>

#include "lamalpha/io.hpp"

namespace lam {
namespace {

double falling_factorial(int n, int r) {
  double v = 1;
  for (int i = 1; i < r; ++i) v *= n - i;
  return v;
}

std::string property_desc(const PropertySpec& p) {
  switch (p.mode) {
    case PropertySpec::Mode::monotone:
      return "mon(" + std::to_string(p.forbidden.size()) + " forbidden)";
    case PropertySpec::Mode::hereditary:
      return "her(" + std::to_string(p.forbidden.size()) + " forbidden)";
    case PropertySpec::Mode::chromatic_bounded:
      return "chi<=" + std::to_string(p.bound);
    case PropertySpec::Mode::weak_chromatic_bounded:
      return "weak-chi<=" + std::to_string(p.bound);
  }
  return "?";
}

void fill_ex(SequenceRow& row, const PropertySpec& p, int n,
             const EnumerationConfig& cfg) {
  auto ex = ex_value(p, n, cfg);
  row.ex = ex.ex;
  double total = static_cast<double>(binomial(n, p.r));
  row.ex_density = total > 0 ? row.ex / total : 0.0;
  row.kns_ratio = row.ex_density;
  row.extremal_witness = hg_identifier(ex.witness);
}

// exact integer comparison: ex_a / C(a,r) >= ex_b / C(b,r)
bool density_ge(std::int64_t ex_a, int a, std::int64_t ex_b, int b, int r) {
  return ex_a * binomial(b, r) >= ex_b * binomial(a, r);
}

}  // namespace

SequenceReport kns_sequence(const PropertySpec& p, int n_lo, int n_hi,
                            const EnumerationConfig& cfg) {
  if (n_lo < 1 || n_hi < n_lo)
    throw std::invalid_argument("kns_sequence: bad range");
  SequenceReport report;
  report.property_desc = property_desc(p);
  report.r = p.r;
  report.alpha = 1;
  for (int n = n_lo; n <= n_hi; ++n) {
    SequenceRow row;
    row.n = n;
    fill_ex(row, p, n, cfg);
    report.rows.push_back(std::move(row));
  }
  for (size_t i = 1; i < report.rows.size(); ++i)
    if (!density_ge(report.rows[i - 1].ex, report.rows[i - 1].n,
                    report.rows[i].ex, report.rows[i].n, p.r))
      report.kns_monotone = false;
  return report;
}

SequenceReport theorem1_sequence(const PropertySpec& p, int n_lo, int n_hi,
                                 double alpha, const EnumerationConfig& cfg) {
  if (alpha < 1) throw std::invalid_argument("theorem1_sequence: alpha >= 1");
  SequenceReport report = kns_sequence(p, n_lo, n_hi, cfg);
  report.alpha = alpha;
  report.has_lambda = true;
  for (auto& row : report.rows) {
    auto lp = lambda_property(p, row.n, alpha, cfg);
    row.lambda_pn = lp.value;
    row.th1_ratio = lp.value *
                    std::pow(static_cast<double>(row.n), p.r / alpha - 1.0) /
                    falling_factorial(row.n, p.r);
    if (lp.value > 0) row.extremal_witness = hg_identifier(lp.witness);
  }
  for (size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].lambda_pn < report.rows[i - 1].lambda_pn - 1e-8)
      report.lambda1_nondecreasing = false;
    if (report.rows[i].th1_ratio > report.rows[i - 1].th1_ratio + 1e-8)
      report.th1_nonincreasing = false;
  }
  return report;
}

FlatnessReport flatness_probe(const PropertySpec& p, int n_lo, int n_hi,
                              const EnumerationConfig& cfg) {
  FlatnessReport probe;
  probe.sequence = theorem1_sequence(p, n_lo, n_hi, 1.0, cfg);
  const auto& rows = probe.sequence.rows;
  for (const auto& row : rows) {
    if (row.lambda_pn > probe.sup_lambda1) {
      probe.sup_lambda1 = row.lambda_pn;
      probe.gap_witness = row.extremal_witness;
    }
  }
  probe.last_density = rows.back().ex_density;
  probe.density_trend = rows.size() >= 2
                            ? rows.back().ex_density -
                                  rows[rows.size() - 2].ex_density
                            : 0.0;
  // flat means lambda^(1)(P) = pi(P); a sup already above the density tail is
  // a finite witness against flatness (the densities only decrease from here)
  probe.consistent_with_flat = probe.sup_lambda1 <= probe.last_density + 1e-9;
  if (probe.consistent_with_flat) probe.gap_witness.clear();
  return probe;
}

BlowupProbeReport blowup_invariance_probe(const Hypergraph& f,
                                          const std::vector<int>& k_vec,
                                          double alpha, int n_lo, int n_hi,
                                          const EnumerationConfig& cfg) {
  BlowupProbeReport report;
  report.base =
      theorem1_sequence(PropertySpec::mon({f}), n_lo, n_hi, alpha, cfg);
  report.blown = theorem1_sequence(PropertySpec::mon({blow_up(f, k_vec)}),
                                   n_lo, n_hi, alpha, cfg);
  report.final_gap = std::abs(report.base.rows.back().th1_ratio -
                              report.blown.rows.back().th1_ratio);
  return report;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string sequence_to_csv(const SequenceReport& report) {
  std::string out = "# lamalpha sequence csv v1\n";
  out += "n,ex,ex_density,lambda_pn,kns_ratio,th1_ratio,extremal_witness\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.ex) + "," +
           fmt17(row.ex_density) + "," + fmt17(row.lambda_pn) + "," +
           fmt17(row.kns_ratio) + "," + fmt17(row.th1_ratio) + ",\"" +
           row.extremal_witness + "\"\n";
  }
  return out;
}

nlohmann::json sequence_to_json(const SequenceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"ex", row.ex},
                    {"ex_density", row.ex_density},
                    {"lambda_pn", row.lambda_pn},
                    {"kns_ratio", row.kns_ratio},
                    {"th1_ratio", row.th1_ratio},
                    {"extremal_witness", row.extremal_witness}});
  }
  return nlohmann::json{{"format", "lamalpha-sequence-v1"},
                        {"property", report.property_desc},
                        {"r", report.r},
                        {"alpha", report.alpha},
                        {"has_lambda", report.has_lambda},
                        {"kns_monotone", report.kns_monotone},
                        {"lambda1_nondecreasing", report.lambda1_nondecreasing},
                        {"th1_nonincreasing", report.th1_nonincreasing},
                        {"rows", rows}};
}

}  // namespace lam

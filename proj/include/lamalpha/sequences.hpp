#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lamalpha/enumerate.hpp"

namespace lam {

struct SequenceRow {
  int n = 0;
  std::int64_t ex = 0;
  double ex_density = 0;  // ex / C(n,r)
  double lambda_pn = 0;
  double kns_ratio = 0;   // the KNS sequence value, ex / C(n,r)
  double th1_ratio = 0;   // lambda_pn n^(r/alpha-1) / ((n-1)...(n-r+1))
  std::string extremal_witness;
};

struct SequenceReport {
  std::string property_desc;
  int r = 2;
  double alpha = 1;
  bool has_lambda = false;
  std::vector<SequenceRow> rows;
  bool kns_monotone = true;             // exact integer check
  bool lambda1_nondecreasing = true;    // asserted when alpha == 1
  bool th1_nonincreasing = true;        // reported, not asserted, for alpha > 1
};

/// ex(P,n) over the range with the exact KNS monotonicity check.
SequenceReport kns_sequence(const PropertySpec& p, int n_lo, int n_hi,
                            const EnumerationConfig& cfg);

/// lambda^(alpha)(P,n) over the range with the normalized ratio
/// lambda n^(r/alpha - 1) / (n-1)...(n-r+1).
SequenceReport theorem1_sequence(const PropertySpec& p, int n_lo, int n_hi,
                                 double alpha, const EnumerationConfig& cfg);

struct FlatnessReport {
  SequenceReport sequence;          // alpha = 1 rows
  double sup_lambda1 = 0;
  double last_density = 0;
  double density_trend = 0;         // last first-difference of the densities
  bool consistent_with_flat = true;
  std::string gap_witness;          // maximizer of lambda^(1) when flagged
};

/// Compares sup_n lambda^(1)(P,n) against the tail of the density sequence.
FlatnessReport flatness_probe(const PropertySpec& p, int n_lo, int n_hi,
                              const EnumerationConfig& cfg);

struct BlowupProbeReport {
  SequenceReport base;      // Mon(F)
  SequenceReport blown;     // Mon(F(k))
  double final_gap = 0;     // |last th1 ratios difference|
};

/// Informational probe of the blow-up invariance of lambda^(alpha)(Mon(.)).
BlowupProbeReport blowup_invariance_probe(const Hypergraph& f,
                                          const std::vector<int>& k_vec,
                                          double alpha, int n_lo, int n_hi,
                                          const EnumerationConfig& cfg);

std::string sequence_to_csv(const SequenceReport& report);
nlohmann::json sequence_to_json(const SequenceReport& report);

}  // namespace lam

#pragma once

#include <cstdint>
#include <vector>

#include "aovauc/csv.hpp"

namespace aovauc {

struct DiagnosticResult {
  std::vector<double> f_samples;  // B recomputed F statistics, iteration order
  double ks_distance = 0.0;       // sup distance to the F(df1, df2) CDF
  int df1 = 0;                    // k - 1
  int df2 = 0;                    // n - k
};

// Null-distribution check: B times, permute the treatment labels across
// subjects (group sizes preserved), bootstrap each subject's pre and post
// samples with replacement, and recompute the F statistic. Returns all F
// values plus their Kolmogorov-Smirnov distance to F(k-1, n-k). Replicate b
// draws from substream (seed, b), so results are deterministic for any
// worker count.
DiagnosticResult resampling_diagnostic(const Dataset& dataset, int replicates,
                                       std::uint64_t seed, int workers = 1);

}  // namespace aovauc

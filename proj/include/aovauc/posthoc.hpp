#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aovauc/inference.hpp"
#include "aovauc/rng.hpp"

namespace aovauc {

// Simulated reference law of the maximum absolute studentized difference
// among k groups under the global null. Depends only on k; regenerating
// with the same (k, R, seed) reproduces it exactly.
struct ReferenceDistribution {
  int k = 0;
  std::uint64_t replicates = 0;
  std::vector<double> sorted_max_diffs;  // ascending
  std::uint64_t seed = 0;
};

struct PosthocPair {
  std::string group_i;
  std::string group_j;
  double delta = 0.0;    // studentized difference
  double p_value = 1.0;  // empirical proportion, ties counted as >=
};

struct PosthocTable {
  std::vector<PosthocPair> pairs;  // k(k-1)/2 pairs, (i, j) with i < j
  double alpha = 0.05;
  double critical_value = 0.0;
};

// (mean_i - mean_j) / sqrt(var_of_mean_i + var_of_mean_j). Antisymmetric;
// errors when both variances are zero.
double studentized_difference(const GroupSummary& gi, const GroupSummary& gj);

// R replicates of max_{i<j} |V_i - V_j| / sqrt(2) over k iid standard
// normals, sorted ascending. Pass a freshly constructed stream to make the
// result a pure function of (k, R, seed, stream_id).
ReferenceDistribution reference_distribution(int k, std::uint64_t replicates, RngStream& rng);

// Process-wide cache keyed by (k, R, seed); the law only depends on k, so
// one simulation pass per configuration is enough. Thread-safe.
const ReferenceDistribution& cached_reference_distribution(int k, std::uint64_t replicates,
                                                           std::uint64_t seed);

// Empirical p-value per pair: #{mD_r >= |delta|} / R. The table carries the
// empirical (1 - alpha)-quantile of the reference as its critical value.
PosthocTable posthoc_pvalues(const std::vector<GroupSummary>& summaries,
                             const ReferenceDistribution& ref, double alpha);

// ceil((1 - alpha) * R)-th order statistic of the reference distribution.
double reference_upper_quantile(const ReferenceDistribution& ref, double alpha);

// Convenience: quantile of a (possibly cached) reference distribution.
double critical_value(int k, double alpha, std::uint64_t replicates, std::uint64_t seed);

}  // namespace aovauc

#pragma once

#include <string>
#include <vector>

#include "aovauc/empirical.hpp"

namespace aovauc {

// Per-subject empirical AUC with its plug-in variance and sample sizes.
struct SubjectEstimate {
  std::string group_id;
  std::string subject_id;
  double auc = 0.0;
  double variance = 0.0;
  int m_pre = 0;
  int m_post = 0;
};

// Per-treatment aggregation. var_of_mean is the estimated variance of the
// group mean AUC: n^-2 * sum_j (variance_j + tau2).
struct GroupSummary {
  std::string group_id;
  int n = 0;
  double mean_auc = 0.0;
  double tau2 = 0.0;
  double var_of_mean = 0.0;
  std::vector<double> subject_variances;
};

// Inputs to a centered-covariance pseudoinverse quadratic form: a value
// vector and the diagonal entries of its covariance.
struct QuadraticFormInput {
  std::vector<double> values;
  std::vector<double> variances;
};

struct AnovaTable {
  double sse = 0.0;
  int df_sse = 0;
  double ssf = 0.0;
  int df_ssf = 0;
  double mean_square_intra = 0.0;
  double mean_square_inter = 0.0;
  double f_stat = 0.0;
  double p_value = 1.0;
  std::vector<GroupSummary> per_group;  // sorted by group_id
};

// Method-of-moments between-subject variance:
// max(0, sample_variance(aucs) - mean(variances)), sample variance with
// divisor n-1. Requires n >= 2.
double between_subject_variance(const std::vector<double>& aucs,
                                const std::vector<double>& variances);

// v * S^+ * v' with S = U diag(d) U and U = I - J/n, evaluated through a
// symmetric eigendecomposition of S. Eigenvalues at or below 1e-10 times
// the largest one are treated as zero (S has exact rank n-1 analytically).
// Invariant to adding a constant to every entry of v.
double centered_quadratic_form(const QuadraticFormInput& q);

// Aggregate one group's subject estimates (n >= 2, shared group_id).
GroupSummary summarize_group(const std::vector<SubjectEstimate>& estimates);

// ANOVA-type test of equal treatment AUCs. Groups are keyed by group_id and
// processed in sorted order; SSE sums the per-group quadratic forms with
// weights sigma^2_ij + tau^2_i, SSF is the quadratic form of the group
// means with their var_of_mean weights, and
// F = (df_sse * SSF) / (df_ssf * SSE) is referred to F(k-1, n-k).
AnovaTable anova_auc(const std::vector<SubjectEstimate>& estimates);

// Per-subject AUC and plug-in variance for a batch of paired samples.
std::vector<SubjectEstimate> estimate_subjects(const std::vector<PairedSample>& subjects);

}  // namespace aovauc

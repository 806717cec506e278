#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace aovauc {

// Finite real sample kept sorted ascending. Construction validates and
// sorts; all other operations can then run on ordered data.
class RealSample {
 public:
  explicit RealSample(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

// One subject's measurements: pre-treatment values play the negative-class
// role, post-treatment values the positive-class role.
struct PairedSample {
  RealSample pre;
  RealSample post;
  std::string subject_id;
  std::string group_id;

  // True when either side has fewer than 2 measures; callers surface this
  // as a data-quality warning, the subject is still analyzable.
  bool undersized() const noexcept { return pre.size() < 2 || post.size() < 2; }
};

// Right-continuous step function on (0, 1]. Piece p covers
// (upper_edges[p-1], upper_edges[p]] with upper_edges[-1] taken as 0; the
// last edge is exactly 1.
struct StepFunction {
  std::vector<double> upper_edges;
  std::vector<double> plateau_values;
};

// Empirical CDF: (#values <= t) / m.
double ecdf_eval(const RealSample& s, double t);

// Generalized-inverse quantile inf{x : ecdf(x) >= p} for p in (0, 1],
// i.e. the ceil(p*m)-th order statistic.
double quantile_eval(const RealSample& s, double p);

// Empirical AUC (1/(m_P*m_N)) * sum_ij [ I(x_j < y_i) + I(x_j = y_i)/2 ].
// Evaluated by a merged walk over the two sorted samples with midrank tie
// handling; the result equals the pairwise double sum exactly.
double empirical_auc(const PairedSample& ps);

// Step-function representation of t -> F_hat(G_plus(t)) on (0, 1], where
// F_hat is the ECDF of f_source and G_plus the quantile function of
// g_source. Breakpoints sit at j/m_G, j = 1..m_G.
StepFunction compose_ecdf_quantile(const RealSample& f_source, const RealSample& g_source);

// Variance of h under the uniform measure on (0, 1]:
// integral of h^2 minus the squared integral of h. Exact for the plateau
// representation; never negative.
double star_norm(const StepFunction& h);

// Plug-in variance of the subject's empirical AUC:
// m_N^-1 * ||F.G+||* + m_P^-1 * ||G.F+||*. Always in [0, 0.5].
double subject_auc_variance(const PairedSample& ps);

}  // namespace aovauc

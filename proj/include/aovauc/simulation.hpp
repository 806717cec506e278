#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aovauc/empirical.hpp"
#include "aovauc/rng.hpp"

namespace aovauc {

// One Monte Carlo cell: k treatments, Poisson-sized cohorts with expected
// (and minimum-2) counts, binormal measurements with per-subject random
// effects of scale sigma_eps, and target AUCs realized through the
// location shift mu_i = sqrt(2) * Phi^-1(A_i).
struct SimScenario {
  std::string name;
  int k = 4;
  int n_subjects = 25;        // expected subjects per group (n_R)
  int m_pre = 25;             // expected pre-treatment measures (m_N)
  int m_post = 25;            // expected post-treatment measures (m_P)
  std::vector<double> target_aucs;
  double sigma_eps = 0.0;
  double alpha = 0.05;
  int iterations = 5000;
  std::uint64_t R_posthoc = 1000000;
  std::uint64_t seed = 1;
  // Post hoc pair decisions are made only on iterations where the global
  // test rejects; the ungated variant runs them on every iteration.
  bool gate_posthoc_on_rejection = true;
  int workers = 1;
};

struct SimOutcome {
  double rejection_rate = 0.0;
  double posthoc_success_mean = 0.0;
  double posthoc_success_sd = 0.0;
  int iterations_run = 0;
  SimScenario scenario;
};

// Binormal location shift giving AUC = Phi(mu / sqrt(2)) for N(0,1) vs
// N(mu,1). Domain [0.5, 1).
double target_mu(double auc);

// Throws ValidationError listing every violated field constraint.
void validate_scenario(const SimScenario& s);

// One synthetic dataset draw. Group labels are "T01".."Tkk" so their sorted
// order matches target_aucs. All randomness comes from the passed stream.
std::vector<PairedSample> generate_dataset(const SimScenario& s, RngStream& rng);

// Full Monte Carlo pass: iteration i draws from substream (seed, i), runs
// the ANOVA, and (when rejecting, or always if ungated) the post hoc pair
// decisions. Deterministic for fixed seed regardless of worker count.
SimOutcome run_scenario(const SimScenario& s);

// Number of correctly classified pairs: a truly-equal pair counts when not
// rejected, a truly-different pair counts when rejected. pair_rejected is
// ordered (0,1), (0,2), ..., (k-2,k-1).
int posthoc_success_count(const std::vector<double>& true_aucs,
                          const std::vector<std::uint8_t>& pair_rejected);

// Declarative scenario grid: "[name]" block headers followed by
// "key = value" lines (keys match SimScenario fields; target_aucs is a
// comma-separated list). '#' starts a comment.
std::vector<SimScenario> load_scenario_config(const std::string& path);
std::vector<SimScenario> parse_scenario_config(std::istream& in, const std::string& origin);

// CSV row serialization of a finished cell.
std::string scenario_csv_header();
std::string scenario_csv_row(const SimOutcome& outcome);

}  // namespace aovauc

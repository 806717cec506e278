#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aovauc/csv.hpp"
#include "aovauc/inference.hpp"
#include "aovauc/posthoc.hpp"

namespace aovauc {

struct AnalyzeOptions {
  bool posthoc = false;
  double alpha = 0.05;
  std::uint64_t R_posthoc = 1000000;
  std::uint64_t seed = 1;
  bool winsorize = false;
  bool standardize = false;
};

// Everything a rendered report needs: the ANOVA table, the optional post
// hoc table, per-group random-effect standard errors sqrt(tau2) with their
// unweighted mean, data-quality warnings, and provenance for reruns.
struct ReportDocument {
  AnovaTable anova;
  std::optional<PosthocTable> posthoc;
  std::vector<double> tau_se_per_group;  // sorted group order
  double tau_se_mean = 0.0;
  std::vector<std::string> warnings;
  Provenance provenance;
  AnalyzeOptions options;
};

// Preprocess (optional winsorization, then optional standardization), then
// estimate per-subject AUCs and run the ANOVA and optional post hoc test.
// All validation failures are aggregated before aborting.
ReportDocument analyze(const Dataset& dataset, const AnalyzeOptions& options);

// p-value display: 4 significant digits with a "< 2.2e-16" floor.
std::string format_pvalue(double p);

// R-style significance code for a p-value ("***", "**", "*", ".", or " ").
std::string significance_code(double p);

// Fixed-layout text report: the Intra-group / Inter-groups / Total table,
// the significance legend, the random-effects line, warnings, and the post
// hoc upper-triangular p-value matrix when present.
std::string render_text_report(const ReportDocument& doc);

// Machine-readable document {anova, groups, posthoc?, warnings, provenance}
// with raw (unfloored) p-values as doubles.
nlohmann::json to_json(const ReportDocument& doc);

}  // namespace aovauc

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aovauc/empirical.hpp"

namespace aovauc {

// Column names carrying the measurement value, treatment label, subject
// label and phase label in the input CSV.
struct ColumnMap {
  std::string value = "value";
  std::string group = "group";
  std::string subject = "subject";
  std::string phase = "phase";
};

struct PhaseLabels {
  std::string pre_label = "pre";
  std::string post_label = "post";
};

// How a dataset was obtained; enough to reproduce the run.
struct Provenance {
  std::string source_path;
  ColumnMap columns;
  PhaseLabels phases;
  bool winsorized = false;
  bool standardized = false;
};

struct Dataset {
  std::vector<PairedSample> subjects;    // first-appearance order
  std::vector<std::string> group_ids;    // first-appearance order, distinct
  Provenance provenance;
  std::vector<std::string> warnings;
};

// Loads a RFC 4180 CSV (comma-delimited, header row required, quoted fields
// honored) into a Dataset. Rows are grouped by subject and phase; subjects
// keep first-appearance order. Every malformed row, unknown phase label,
// cross-group subject or missing phase is collected and reported together
// in a ValidationError with record numbers (header = row 1).
Dataset load_csv(const std::string& path, const ColumnMap& columns, const PhaseLabels& phases);
Dataset load_csv_stream(std::istream& in, const std::string& origin, const ColumnMap& columns,
                        const PhaseLabels& phases);

}  // namespace aovauc

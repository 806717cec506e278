#pragma once

#include <vector>

#include "aovauc/empirical.hpp"

namespace aovauc {

struct WinsorizeResult {
  std::vector<double> values;
  // Set when MAD == 0 and at least one value was clipped to the median;
  // callers should surface a data-quality warning.
  bool mad_zero_clipped = false;
};

// Hampel winsorization: values outside [median - 3*MAD, median + 3*MAD] are
// clipped to the nearest bound. MAD is the plain median absolute deviation
// from the median (no consistency factor). Order and length preserved.
WinsorizeResult winsorize_hampel(const std::vector<double>& values);

// Maps every pre and post value to (x - mean_pre) / sd_pre, with the
// standard deviation taken over the pre sample (divisor m_N - 1). Affine
// increasing, so downstream rank statistics are unchanged. Requires
// m_N >= 2 and a nondegenerate pre sample.
PairedSample standardize_by_pre(const PairedSample& ps);

}  // namespace aovauc

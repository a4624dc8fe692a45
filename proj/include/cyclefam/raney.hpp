#pragma once

// Cycle lemma: an integer sequence summing to 1 has exactly one cyclic shift
// whose partial sums are all >= 1.

#include <span>
#include <vector>

namespace cyclefam {

struct RaneyResult {
  int mu = 0;                             ///< zero-based start of the positive shift
  std::vector<int> shifted_partial_sums;  ///< partial sums of r[mu], r[mu+1], ...
};

/// Finds the positive shift without rational arithmetic: mu is the last
/// position attaining the minimum prefix sum, taken mod t. Throws
/// std::invalid_argument if r is empty or does not sum to 1.
RaneyResult raney_mu(std::span<const int> r);

/// True iff every partial sum of the cyclic shift starting at `start` is >= 1.
bool shift_is_positive(std::span<const int> r, int start);

}  // namespace cyclefam

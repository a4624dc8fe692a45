#pragma once

// Exact minimum blocking sets (transversals) by branch and bound.
//
// The search branches on the uncovered block with the fewest admissible
// points. Branch i adds the i-th admissible point and forbids the earlier
// ones, so every minimal blocking set sits at exactly one leaf. A node is cut
// when the greedy count of pairwise-disjoint uncovered blocks exceeds the
// remaining budget. Ground sets of up to 64 points use a single-word bitset;
// larger ones use a multi-word bitset.

#include <optional>

#include "cyclefam/core.hpp"

namespace cyclefam {

struct TransversalReport {
  int tau = 0;
  Block certificate;                       ///< one blocking set of size tau
  std::optional<Family> all_transversals;  ///< every blocking set of size tau
};

/// Some blocking set of exactly `s` points drawn from the ground set, if one
/// exists. Throws std::invalid_argument on an empty family or s < 0.
std::optional<PointSet> has_blocking_set_of_size(const Family& f, int s);

/// Transversal number by ascending search s = 1, 2, ...
/// Throws std::invalid_argument on an empty family.
TransversalReport tau(const Family& f);

/// Every blocking set of size tau(f), as a family with declared_k = tau(f).
Family enumerate_transversals(const Family& f);

/// True iff f is uniform of size k, tau(f) = k and f equals its transversal
/// family. Throws std::invalid_argument on an empty or non-uniform family.
bool is_maximal(const Family& f);

}  // namespace cyclefam

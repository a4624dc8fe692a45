#pragma once

// Constructive lower bound on the transversal number of F(k,t): for any
// candidate set C with fewer than t points, build a block of F(k,t) that
// misses C, recording each step of the argument.

#include <span>
#include <string>
#include <vector>

#include "cyclefam/construction.hpp"
#include "cyclefam/core.hpp"

namespace cyclefam {

/// Full record of one witness construction.
///
/// `avoided` is C after padding to exactly t-1 points. `r[n] = 1 - |C ∩ X_n|`
/// sums to 1, so the cycle lemma yields a start set X_mu disjoint from C.
/// For n = 1..L with L = k - |X_mu|, `slack[n-1]` is
/// n - sum_{i<=n} |C ∩ X_{mu+i}| and `layers[n-1]` holds every position p for
/// which some stay-or-step prefix ending at p avoids C on X_{mu+1..mu+n}.
/// Each layer has at least 1 + slack points.
struct WitnessTrace {
  PointSet avoided;
  std::vector<int> r;
  int mu = 0;
  std::vector<int> slack;
  std::vector<std::vector<int>> layers;
  PSequence chosen_sequence;
  Block block;
};

/// Returns a block of build_family(k, t) disjoint from `avoid`.
///
/// Throws std::invalid_argument if |avoid| >= t, if `avoid` repeats a point,
/// or if some point lies outside layout(k, t).
WitnessTrace witness_block(int k, int t, std::span<const Point> avoid);

/// Stable multi-line rendering of a trace, one field per line.
std::string format_trace(const WitnessTrace& trace);

}  // namespace cyclefam

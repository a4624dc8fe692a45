#pragma once

// End-to-end checks of every computationally checkable claim about F(k,t):
// transversal numbers, witness soundness, cycle-lemma uniqueness, block and
// transversal counts, maximality of the assembled families, the lower-bound
// rows, and agreement of the solver with exhaustive search.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclefam/core.hpp"

namespace cyclefam {

inline constexpr std::uint64_t kDefaultSeed = 20160214;

struct VerifyOptions {
  int k_max = 5;  ///< largest k for the maximality check, in [2, 5]
  std::uint64_t seed = kDefaultSeed;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;  ///< wall time, reported separately from `detail`
};

/// Runs every check in a fixed order. Throws std::invalid_argument for a
/// k_max outside [2, 5].
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Exhaustive transversal search over at most 20 ground points: every
/// blocking set of the smallest size, canonically ordered.
std::vector<PointSet> brute_force_transversals(const Family& f);

/// Cycle families with at most 20 ground points, then seeded random uniform
/// families, `count` instances in total.
std::vector<Family> oracle_corpus(std::uint64_t seed, std::size_t count = 50);

}  // namespace cyclefam

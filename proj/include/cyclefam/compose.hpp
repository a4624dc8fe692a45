#pragma once

// Assembling maximal intersecting families from F(k,t) and its transversals,
// and the table of certified lower bounds on the largest such family.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclefam/core.hpp"

namespace cyclefam {

/// Exact nonnegative fraction num/den.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// True iff value > num/den, compared by cross-multiplication.
  bool less_than(std::uint64_t value) const;

  /// Decimal expansion; exact when den is a power of two.
  std::string decimal() const;
};

/// (k/2)^(k-1).
Rational half_k_power(int k);

/// Number of transversals taking one point from each cycle set:
/// (k-r+1)^(2r-1) for t = 2r-1 and (k-r)^r (k-r+1)^r for t = 2r.
std::uint64_t product_transversal_count(int k, int t);

/// {A ∪ T : A in a, T in b}. Throws std::invalid_argument if the ground sets
/// meet. Uniform inputs of sizes s and u give a uniform result of size s+u.
Family star_product(const Family& a, const Family& b);

/// F(k,k-1) together with {a} ⊛ transversals(F(k,k-1)), where a = x{k-1}.0
/// is the first point outside the cycle sets. Throws for k < 2.
Family build_maximal(int k);

/// F(k,t) together with a ⊛ transversals(F(k,t)). `a` must be a maximal
/// intersecting family of (k-t)-sets whose points avoid the cycle sets;
/// every precondition is checked and reported with std::invalid_argument.
Family compose_general(const Family& a, int k, int t);

struct BoundsRow {
  int k = 0;
  std::uint64_t family_size = 0;        ///< |F(k,k-1)|
  std::uint64_t transversal_count = 0;  ///< |transversals of F(k,k-1)|
  std::uint64_t lower_bound_witness = 0;
  Rational comparison_value;            ///< (k/2)^(k-1)
  bool maximality_verified = false;

  bool bound_holds() const { return comparison_value.less_than(lower_bound_witness); }
};

/// Largest k for which bounds_table enumerates transversals.
inline constexpr int kBoundsMaxK = 7;
/// Largest k for which bounds_table also checks maximality of build_maximal.
inline constexpr int kMaximalityMaxK = 5;

/// One row per k in [k_min, k_max]. Maximality of build_maximal(k) is checked
/// for k <= min(verify_maximal_up_to, kMaximalityMaxK). Throws unless
/// 2 <= k_min <= k_max <= kBoundsMaxK.
std::vector<BoundsRow> bounds_table(int k_min, int k_max,
                                    int verify_maximal_up_to = kMaximalityMaxK);

}  // namespace cyclefam

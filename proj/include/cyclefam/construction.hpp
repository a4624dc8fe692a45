#pragma once

// The cycle family F(k,t): t pairwise disjoint cycle sets X_0..X_{t-1}, and
// for each n every k-set made of X_n plus one point from each of the next
// k - |X_n| cycle sets, chosen by a stay-or-step position sequence.

#include <cstdint>
#include <vector>

#include "cyclefam/core.hpp"

namespace cyclefam {

struct GroundLayout {
  int k = 0;
  int t = 0;
  std::vector<int> sizes;  ///< sizes[n] = |X_n|

  /// |X_{n mod t}|.
  int size_of(int n) const { return sizes[static_cast<std::size_t>(n % t)]; }

  /// Number of points each block borrows from the cycle sets after X_n.
  int tail_length(int n) const { return k - size_of(n); }

  /// True iff p names a point x{n}.{q} with n < t and q < |X_n|.
  bool contains(const Point& p) const;

  int total_points() const;

  /// All points of X_0, ..., X_{t-1}, canonically ordered.
  PointSet points() const;

  /// The points of X_n.
  PointSet cycle_set(int n) const;
};

/// Cycle set sizes for F(k,t): k - floor(t/2) on the first floor((t-1)/2)+1
/// sets, k - floor((t-1)/2) on the rest. Throws std::invalid_argument unless
/// 1 <= t <= k.
GroundLayout layout(int k, int t);

/// p_1..p_L with p_0 = 0 implicit and each term equal to its predecessor or
/// one more.
class PSequence {
 public:
  PSequence() = default;
  /// Throws std::invalid_argument if the stay-or-step rule is violated.
  explicit PSequence(std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const PSequence&, const PSequence&) = default;

 private:
  std::vector<int> values_;
};

/// All 2^length sequences, in binary-counter order where the first step is
/// the most significant bit (0 = stay, 1 = step).
std::vector<PSequence> enumerate_psequences(int length);

/// X_n together with x^{n+i}_{seq[i-1]} for i = 1..|seq| (superscripts mod t).
/// Throws std::out_of_range on a bad n or a position outside its cycle set,
/// and std::invalid_argument if |seq| != k - |X_n|.
Block block_for(int n, const PSequence& seq, const GroundLayout& layout);

/// Every block of F(k,t). The result has declared_k = k.
Family build_family(int k, int t);

/// |F(k,t)|: (2r-1) 2^(r-1) for t = 2r-1 and 3r 2^(r-1) for t = 2r.
std::uint64_t block_count_closed_form(int k, int t);

}  // namespace cyclefam

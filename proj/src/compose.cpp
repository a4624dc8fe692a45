#include "cyclefam/compose.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclefam/construction.hpp"
#include "cyclefam/solver.hpp"

namespace cyclefam {
namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Family union_of(const Family& a, const Family& b, int k) {
  std::vector<Block> blocks(a.begin(), a.end());
  blocks.insert(blocks.end(), b.begin(), b.end());
  return Family(std::move(blocks), k);
}

}  // namespace

bool Rational::less_than(std::uint64_t value) const {
  // num < value * den  iff  floor(num / den) < value
  return num / den < value;
}

std::string Rational::decimal() const {
  std::string out = std::to_string(num / den);
  std::uint64_t rem = num % den;
  if (rem == 0) return out;
  out += '.';
  for (int digits = 0; rem != 0 && digits < 30; ++digits) {
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  return out;
}

Rational half_k_power(int k) {
  if (k < 1) throw std::invalid_argument("(k/2)^(k-1) needs k >= 1");
  return Rational{ipow(static_cast<std::uint64_t>(k), k - 1), ipow(2, k - 1)};
}

std::uint64_t product_transversal_count(int k, int t) {
  layout(k, t);
  const int r = (t + 1) / 2;
  const auto kr = static_cast<std::uint64_t>(k - r);
  return t % 2 == 1 ? ipow(kr + 1, 2 * r - 1) : ipow(kr, r) * ipow(kr + 1, r);
}

Family star_product(const Family& a, const Family& b) {
  const PointSet pa = ground_set(a);
  const PointSet pb = ground_set(b);
  if (Block(pa).intersects(pb)) {
    throw std::invalid_argument("star product needs families on disjoint point sets");
  }
  std::vector<Block> blocks;
  blocks.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      std::vector<Point> points(x.begin(), x.end());
      points.insert(points.end(), y.begin(), y.end());
      blocks.emplace_back(std::move(points));
    }
  }
  std::optional<int> k;
  if (a.declared_k() && b.declared_k()) k = *a.declared_k() + *b.declared_k();
  return Family(std::move(blocks), k);
}

Family build_maximal(int k) {
  if (k < 2) throw std::invalid_argument("maximal family assembly needs k >= 2");
  const int t = k - 1;
  const Family base = build_family(k, t);
  const Family apex(std::vector<Block>{Block{Point{t, 0}}}, 1);
  return union_of(base, star_product(apex, enumerate_transversals(base)), k);
}

Family compose_general(const Family& a, int k, int t) {
  const GroundLayout g = layout(k, t);
  if (t > k - 1) throw std::invalid_argument("composition needs t <= k-1");
  if (a.empty()) throw std::invalid_argument("composition needs a nonempty family");
  if (!is_uniform(a, k - t)) {
    throw std::invalid_argument("composition needs a family of " + std::to_string(k - t) +
                                "-sets");
  }
  for (const auto& p : ground_set(a)) {
    if (g.contains(p)) {
      throw std::invalid_argument("point " + p.str() + " collides with a cycle set of F(" +
                                  std::to_string(k) + "," + std::to_string(t) + ")");
    }
  }
  if (!is_maximal(a)) {
    throw std::invalid_argument("composition needs a maximal intersecting family");
  }
  const Family base = build_family(k, t);
  return union_of(base, star_product(a, enumerate_transversals(base)), k);
}

std::vector<BoundsRow> bounds_table(int k_min, int k_max, int verify_maximal_up_to) {
  if (k_min < 2 || k_min > k_max) throw std::invalid_argument("bounds need 2 <= k_min <= k_max");
  if (k_max > kBoundsMaxK) {
    throw std::invalid_argument("k_max above " + std::to_string(kBoundsMaxK) +
                                " is beyond exact transversal enumeration");
  }
  const int maximal_limit = std::min(verify_maximal_up_to, kMaximalityMaxK);
  std::vector<BoundsRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    const Family base = build_family(k, k - 1);
    BoundsRow row;
    row.k = k;
    row.family_size = base.size();
    row.transversal_count = enumerate_transversals(base).size();
    row.lower_bound_witness = row.family_size + row.transversal_count;
    row.comparison_value = half_k_power(k);
    if (k <= maximal_limit) {
      const Family maximal = build_maximal(k);
      row.maximality_verified = is_maximal(maximal) && maximal.size() == row.lower_bound_witness;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cyclefam

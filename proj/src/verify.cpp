#include "cyclefam/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cyclefam/compose.hpp"
#include "cyclefam/construction.hpp"
#include "cyclefam/raney.hpp"
#include "cyclefam/solver.hpp"
#include "cyclefam/witness.hpp"

namespace cyclefam {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Gosper's hack: next larger integer with the same popcount.
std::uint32_t next_combination(std::uint32_t x) {
  const std::uint32_t c = x & (~x + 1);
  const std::uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls fn on every subset of `ground` with `size` points.
template <class Fn>
void for_each_subset(const PointSet& ground, int size, Fn&& fn) {
  const int n = static_cast<int>(ground.size());
  if (size > n) return;
  PointSet subset;
  if (size == 0) {
    fn(subset);
    return;
  }
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = (std::uint32_t{1} << size) - 1; mask < limit;
       mask = next_combination(mask)) {
    subset.clear();
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      subset.push_back(ground[static_cast<std::size_t>(std::countr_zero(m))]);
    }
    fn(subset);
  }
}

CheckResult tau_sweep() {
  const auto start = Clock::now();
  int instances = 0;
  std::ostringstream bad;
  for (int k = 1; k <= 7; ++k) {
    for (int t = 1; t <= k; ++t) {
      ++instances;
      const int got = tau(build_family(k, t)).tau;
      if (got != t) bad << " tau(F(" << k << "," << t << "))=" << got;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << instances << " instances" << bad.str();
  return {"tau-sweep", bad.str().empty() && elapsed < 60.0, detail.str(), elapsed};
}

CheckResult witness_soundness() {
  long long checked = 0;
  long long failures = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int t = 1; t <= k; ++t) {
      const Family f = build_family(k, t);
      for_each_subset(layout(k, t).points(), t - 1, [&](const PointSet& c) {
        ++checked;
        const Block b = witness_block(k, t, c).block;
        if (!f.contains(b) || b.intersects(c)) ++failures;
      });
    }
  }
  std::ostringstream detail;
  detail << checked << " candidate sets, " << failures << " failures";
  return {"witness-soundness", failures == 0, detail.str()};
}

bool raney_agrees(const std::vector<int>& r) {
  int positive = 0;
  int found = -1;
  for (int s = 0; s < static_cast<int>(r.size()); ++s) {
    if (shift_is_positive(r, s)) {
      ++positive;
      found = s;
    }
  }
  return positive == 1 && raney_mu(r).mu == found;
}

CheckResult raney_uniqueness(std::uint64_t seed) {
  long long exhaustive = 0;
  long long failures = 0;
  for (int len = 1; len <= 8; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<int> r;
      int sum = 0;
      for (int d : digits) {
        r.push_back(d - 1);
        sum += d - 1;
      }
      if (sum == 1) {
        ++exhaustive;
        if (!raney_agrees(r)) ++failures;
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == 4) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 12);
  std::uniform_int_distribution<int> entry(-3, 3);
  constexpr int kTrials = 10000;
  for (int trial = 0; trial < kTrials; ++trial) {
    std::vector<int> r(static_cast<std::size_t>(length(rng)));
    int sum = 0;
    for (auto& v : r) sum += (v = entry(rng));
    r[std::uniform_int_distribution<std::size_t>(0, r.size() - 1)(rng)] += 1 - sum;
    if (!raney_agrees(r)) ++failures;
  }
  std::ostringstream detail;
  detail << exhaustive << " exhaustive + " << kTrials << " random sequences, " << failures
         << " failures";
  return {"raney-uniqueness", failures == 0, detail.str()};
}

CheckResult block_counts() {
  std::ostringstream bad;
  for (int k = 1; k <= 8; ++k) {
    for (int t = 1; t <= k; ++t) {
      const auto got = build_family(k, t).size();
      if (got != block_count_closed_form(k, t)) bad << " |F(" << k << "," << t << ")|=" << got;
    }
  }
  const std::pair<std::pair<int, int>, std::size_t> spots[] = {
      {{3, 2}, 3}, {{4, 3}, 6}, {{5, 4}, 12}, {{7, 6}, 36}};
  for (const auto& [kt, expected] : spots) {
    const auto got = build_family(kt.first, kt.second).size();
    if (got != expected) bad << " spot |F(" << kt.first << "," << kt.second << ")|=" << got;
  }
  return {"block-counts", bad.str().empty(), "k <= 8, closed form and spot values" + bad.str()};
}

CheckResult transversal_excess() {
  const auto t32 = enumerate_transversals(build_family(3, 2)).size();
  const auto t43 = enumerate_transversals(build_family(4, 3)).size();
  const auto p32 = product_transversal_count(3, 2);
  const auto p43 = product_transversal_count(4, 3);
  std::ostringstream detail;
  detail << "|T(3,2)|=" << t32 << " > " << p32 << ", |T(4,3)|=" << t43 << " > " << p43;
  return {"transversal-excess", t32 == 7 && p32 == 6 && p43 == 27 && t43 > p43, detail.str()};
}

CheckResult maximality(int k_max) {
  std::ostringstream detail;
  bool ok = true;
  for (int k = 2; k <= k_max; ++k) {
    const Family m = build_maximal(k);
    const bool maximal = is_maximal(m);
    ok = ok && maximal;
    detail << "k=" << k << ":" << m.size() << (maximal ? " maximal; " : " NOT maximal; ");
  }
  if (k_max >= 3) {
    const auto size3 = build_maximal(3).size();
    ok = ok && size3 == 10;
    detail << "|M3|=" << size3;
  }
  return {"maximality", ok, detail.str()};
}

CheckResult bound_rows() {
  std::ostringstream detail;
  bool ok = true;
  // Maximality is covered by the dedicated check.
  for (const auto& row : bounds_table(2, 6, 0)) {
    ok = ok && row.bound_holds();
    if (row.k > 2) detail << ' ';
    detail << "k=" << row.k << ":" << row.lower_bound_witness << ">"
           << row.comparison_value.decimal();
  }
  return {"bound-rows", ok, detail.str()};
}

CheckResult solver_oracle(std::uint64_t seed) {
  const auto corpus = oracle_corpus(seed);
  int mismatches = 0;
  for (const auto& f : corpus) {
    const auto expected = brute_force_transversals(f);
    const Family got = enumerate_transversals(f);
    const bool tau_ok = tau(f).tau == static_cast<int>(expected.front().size());
    std::vector<PointSet> listed;
    for (const auto& b : got) listed.push_back(b.points());
    if (!tau_ok || listed != expected) ++mismatches;
  }
  std::ostringstream detail;
  detail << corpus.size() << " instances, " << mismatches << " mismatches";
  return {"solver-oracle", mismatches == 0 && corpus.size() == 50, detail.str()};
}

}  // namespace

std::vector<PointSet> brute_force_transversals(const Family& f) {
  const PointSet ground = ground_set(f);
  if (ground.size() > 20) throw std::invalid_argument("exhaustive search capped at 20 points");
  if (f.empty()) throw std::invalid_argument("transversals are defined for nonempty families only");
  for (int size = 0; size <= static_cast<int>(ground.size()); ++size) {
    std::vector<PointSet> found;
    for_each_subset(ground, size, [&](const PointSet& c) {
      if (is_blocking_set(c, f)) found.push_back(c);
    });
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  throw std::logic_error("family has an empty block");
}

std::vector<Family> oracle_corpus(std::uint64_t seed, std::size_t count) {
  std::vector<Family> corpus;
  for (int k = 1; k <= 8 && corpus.size() < count; ++k) {
    for (int t = 1; t <= k && corpus.size() < count; ++t) {
      if (layout(k, t).total_points() <= 20) corpus.push_back(build_family(k, t));
    }
  }
  std::mt19937_64 rng(seed);
  while (corpus.size() < count) {
    const int n = std::uniform_int_distribution<int>(4, 14)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, 12)(rng);
    std::set<Block> blocks;
    for (int attempt = 0; attempt < 8 * m && static_cast<int>(blocks.size()) < m; ++attempt) {
      std::vector<int> idx(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<Point> points;
      for (int i = 0; i < k; ++i) points.push_back({0, idx[static_cast<std::size_t>(i)]});
      blocks.emplace(std::move(points));
    }
    corpus.emplace_back(std::vector<Block>(blocks.begin(), blocks.end()), k);
  }
  return corpus;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.k_max < 2 || options.k_max > kMaximalityMaxK) {
    throw std::invalid_argument("verify needs 2 <= k-max <= " + std::to_string(kMaximalityMaxK));
  }
  std::vector<CheckResult> results;
  const auto timed = [&](auto&& check) {
    const auto start = Clock::now();
    CheckResult r = check();
    r.seconds = seconds_since(start);
    results.push_back(std::move(r));
  };
  timed(tau_sweep);
  timed(witness_soundness);
  timed([&] { return raney_uniqueness(options.seed); });
  timed(block_counts);
  timed(transversal_excess);
  timed([&] { return maximality(options.k_max); });
  timed(bound_rows);
  timed([&] { return solver_oracle(options.seed); });
  return results;
}

}  // namespace cyclefam

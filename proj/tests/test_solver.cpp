#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "cyclefam/compose.hpp"
#include "cyclefam/construction.hpp"
#include "cyclefam/solver.hpp"
#include "test_support.hpp"

using namespace cyclefam;
using namespace cyclefam::testing;

namespace {

Family random_uniform_family(std::mt19937_64& rng, int n, int k, int m) {
  std::set<Block> blocks;
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < 4 * m && static_cast<int>(blocks.size()) < m; ++attempt) {
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Point> points;
    for (int i = 0; i < k; ++i) points.push_back({i % 3, idx[static_cast<std::size_t>(i)]});
    blocks.emplace(std::move(points));
  }
  return Family({blocks.begin(), blocks.end()}, k);
}

}  // namespace

TEST_CASE("has_blocking_set_of_size") {
  const Family f = build_family(3, 2);
  CHECK_FALSE(has_blocking_set_of_size(f, 1).has_value());
  const auto two = has_blocking_set_of_size(f, 2);
  REQUIRE(two.has_value());
  CHECK(two->size() == 2);
  CHECK(is_blocking_set(*two, f));
  const auto four = has_blocking_set_of_size(f, 4);
  REQUIRE(four.has_value());
  CHECK(four->size() == 4);
  CHECK(is_blocking_set(*four, f));
  CHECK_FALSE(has_blocking_set_of_size(f, 6).has_value());
  CHECK_FALSE(has_blocking_set_of_size(f, 0).has_value());

  const auto single = has_blocking_set_of_size(fam({{"x0.0"}}), 1);
  REQUIRE(single.has_value());
  CHECK(*single == pts({"x0.0"}));
  CHECK_THROWS_AS(has_blocking_set_of_size(Family{}, 1), std::invalid_argument);
  CHECK_THROWS_AS(has_blocking_set_of_size(f, -1), std::invalid_argument);
}

TEST_CASE("tau examples") {
  const auto r = tau(build_family(3, 2));
  CHECK(r.tau == 2);
  CHECK(r.certificate.size() == 2);
  CHECK(is_blocking_set(r.certificate.points(), build_family(3, 2)));
  CHECK(tau(build_family(7, 6)).tau == 6);
  CHECK(tau(fam({{"x0.0", "x0.1"}, {"x0.2", "x0.3"}})).tau == 2);
  CHECK_THROWS_AS(tau(Family{}), std::invalid_argument);
}

TEST_CASE("enumerate_transversals examples") {
  const Family t32 = enumerate_transversals(build_family(3, 2));
  CHECK(t32 == fam({{"x0.0", "x1.0"}, {"x0.0", "x1.1"}, {"x0.0", "x1.2"}, {"x0.1", "x1.0"},
                    {"x0.1", "x1.1"}, {"x0.1", "x1.2"}, {"x1.0", "x1.1"}}));
  CHECK(t32.declared_k() == 2);
  CHECK(enumerate_transversals(fam({{"x0.0"}})) == fam({{"x0.0"}}));
  // Frozen from an exhaustive scan.
  CHECK(enumerate_transversals(build_family(4, 3)).size() == 36);
  CHECK(enumerate_transversals(build_family(4, 2)).size() == 13);
  CHECK(enumerate_transversals(build_family(4, 4)).size() == 78);
  CHECK(enumerate_transversals(build_family(5, 4)).size() == 216);
}

TEST_CASE("is_maximal examples") {
  CHECK(is_maximal(fam({{"x0.0", "x0.1"}, {"x0.1", "x0.2"}, {"x0.2", "x0.0"}})));
  CHECK_FALSE(is_maximal(build_family(3, 2)));
  CHECK(is_maximal(fam({{"x0.0"}})));
  CHECK_FALSE(is_maximal(fam({{"x0.0", "x0.1"}})));
  CHECK_THROWS_AS(is_maximal(fam({{"x0.0"}, {"x0.1", "x0.2"}})), std::invalid_argument);
  CHECK_THROWS_AS(is_maximal(Family{}), std::invalid_argument);
}

TEST_CASE("tau sweep: tau(F(k,t)) = t for t <= k <= 7") {
  for (int k = 1; k <= 7; ++k) {
    for (int t = 1; t <= k; ++t) {
      CAPTURE(k);
      CAPTURE(t);
      CHECK(tau(build_family(k, t)).tau == t);
    }
  }
}

TEST_CASE("one point per cycle set is a transversal; the product count is exceeded") {
  for (int k = 2; k <= 6; ++k) {
    for (int t = 1; t <= k; ++t) {
      const GroundLayout g = layout(k, t);
      std::uint64_t product = 1;
      for (int s : g.sizes) product *= static_cast<std::uint64_t>(s);
      CHECK(product == product_transversal_count(k, t));
      if (g.total_points() > 18) continue;
      const Family f = build_family(k, t);
      const Family all = enumerate_transversals(f);
      // Walk every one-per-cycle choice.
      std::vector<int> choice(static_cast<std::size_t>(t), 0);
      std::uint64_t seen = 0;
      while (true) {
        std::vector<Point> c;
        for (int n = 0; n < t; ++n) c.push_back({n, choice[static_cast<std::size_t>(n)]});
        CHECK(all.contains(Block(c)));
        ++seen;
        int n = 0;
        while (n < t && ++choice[static_cast<std::size_t>(n)] == g.sizes[static_cast<std::size_t>(n)]) {
          choice[static_cast<std::size_t>(n++)] = 0;
        }
        if (n == t) break;
      }
      CHECK(seen == product);
      if (t >= 2 && t <= k - 1) CHECK(all.size() > product);
    }
  }
}

TEST_CASE("oracle equivalence on cycle families and random families") {
  for (int k = 1; k <= 8; ++k) {
    for (int t = 1; t <= k; ++t) {
      if (layout(k, t).total_points() > 20) continue;
      const Family f = build_family(k, t);
      const auto expected = oracle_transversals(f);
      CHECK(tau(f).tau == static_cast<int>(expected.front().size()));
      CHECK(as_point_sets(enumerate_transversals(f)) == expected);
    }
  }
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 14)(rng);
    const int k = std::uniform_int_distribution<int>(1, std::min(n, 5))(rng);
    const int m = std::uniform_int_distribution<int>(1, 14)(rng);
    const Family f = random_uniform_family(rng, n, k, m);
    CAPTURE(trial);
    const auto expected = oracle_transversals(f);
    CHECK(tau(f).tau == static_cast<int>(expected.front().size()));
    CHECK(as_point_sets(enumerate_transversals(f)) == expected);
  }
}

TEST_CASE("monotonicity: adding blocks never lowers tau") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Family big = random_uniform_family(rng, 10, 3, 10);
    std::vector<Block> prefix;
    int last = 0;
    for (const auto& b : big) {
      prefix.push_back(b);
      const int now = tau(Family(prefix)).tau;
      CHECK(now >= last);
      last = now;
    }
  }
}

TEST_CASE("ground sets over 64 points use the wide path") {
  const Family wide = build_family(70, 1);
  CHECK(tau(wide).tau == 1);
  CHECK(enumerate_transversals(wide).size() == 70);

  // F(k,2) has the k(k-1) cross pairs plus {x1.0, x1.1}.
  const Family f = build_family(40, 2);
  REQUIRE(ground_set(f).size() == 79);
  CHECK(tau(f).tau == 2);
  const Family all = enumerate_transversals(f);
  CHECK(all.size() == 40 * 39 + 1);
  CHECK(all.contains(blk({"x1.0", "x1.1"})));
  CHECK(enumerate_transversals(build_family(3, 2)).size() == 3 * 2 + 1);
}

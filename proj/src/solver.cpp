#include "cyclefam/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cyclefam {
namespace {

/// Point set over at most 64 ground points.
class WordMask {
 public:
  explicit WordMask(std::size_t /*bits*/) {}

  void set(int i) { word_ |= std::uint64_t{1} << i; }
  void reset(int i) { word_ &= ~(std::uint64_t{1} << i); }
  bool test(int i) const { return (word_ >> i) & 1u; }
  bool intersects(const WordMask& o) const { return (word_ & o.word_) != 0; }
  WordMask minus(const WordMask& o) const {
    WordMask out = *this;
    out.word_ &= ~o.word_;
    return out;
  }
  WordMask& operator|=(const WordMask& o) {
    word_ |= o.word_;
    return *this;
  }
  int count() const { return std::popcount(word_); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t w = word_; w != 0; w &= w - 1) fn(std::countr_zero(w));
  }

 private:
  std::uint64_t word_ = 0;
};

/// Point set over an arbitrary number of ground points.
class WideMask {
 public:
  explicit WideMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[word(i)] |= bit(i); }
  void reset(int i) { words_[word(i)] &= ~bit(i); }
  bool test(int i) const { return (words_[word(i)] & bit(i)) != 0; }
  bool intersects(const WideMask& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  WideMask minus(const WideMask& o) const {
    WideMask out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~o.words_[w];
    return out;
  }
  WideMask& operator|=(const WideMask& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        fn(static_cast<int>(i * 64) + std::countr_zero(w));
      }
    }
  }

 private:
  static std::size_t word(int i) { return static_cast<std::size_t>(i) / 64; }
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i % 64); }
  std::vector<std::uint64_t> words_;
};

template <class Mask>
class BranchSearch {
 public:
  BranchSearch(const Family& f, const PointSet& ground) : ground_(ground) {
    blocks_.reserve(f.size());
    for (const auto& b : f) {
      Mask m(ground_.size());
      for (const auto& p : b) {
        const auto it = std::lower_bound(ground_.begin(), ground_.end(), p);
        m.set(static_cast<int>(it - ground_.begin()));
      }
      blocks_.push_back(m);
    }
  }

  /// Collects blocking sets of at most `budget` points; stops at the first
  /// one when `first_only` is set.
  std::vector<PointSet> run(int budget, bool first_only) {
    budget_ = budget;
    first_only_ = first_only;
    solutions_.clear();
    std::vector<int> uncovered(blocks_.size());
    std::iota(uncovered.begin(), uncovered.end(), 0);
    Mask chosen(ground_.size());
    visit(uncovered, chosen, 0, Mask(ground_.size()));
    return std::move(solutions_);
  }

 private:
  // Returns true when the search should stop.
  bool visit(const std::vector<int>& uncovered, Mask& chosen, int depth, Mask forbidden) {
    if (uncovered.empty()) {
      PointSet s;
      chosen.for_each([&](int i) { s.push_back(ground_[static_cast<std::size_t>(i)]); });
      solutions_.push_back(std::move(s));
      return first_only_;
    }
    if (depth == budget_) return false;

    std::vector<Mask> admissible;
    std::vector<int> counts;
    admissible.reserve(uncovered.size());
    counts.reserve(uncovered.size());
    std::size_t branch = 0;
    for (std::size_t j = 0; j < uncovered.size(); ++j) {
      admissible.push_back(blocks_[static_cast<std::size_t>(uncovered[j])].minus(forbidden));
      counts.push_back(admissible.back().count());
      if (counts.back() == 0) return false;
      if (counts[j] < counts[branch]) branch = j;
    }

    // Greedy packing of pairwise-disjoint admissible parts, smallest first.
    std::vector<std::size_t> order(uncovered.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return counts[a] < counts[b]; });
    Mask packed(ground_.size());
    int lower_bound = 0;
    for (std::size_t j : order) {
      if (!admissible[j].intersects(packed)) {
        packed |= admissible[j];
        if (depth + ++lower_bound > budget_) return false;
      }
    }

    std::vector<int> points;
    admissible[branch].for_each([&](int i) { points.push_back(i); });
    std::vector<int> rest;
    rest.reserve(uncovered.size());
    for (int p : points) {
      rest.clear();
      for (int idx : uncovered) {
        if (!blocks_[static_cast<std::size_t>(idx)].test(p)) rest.push_back(idx);
      }
      chosen.set(p);
      const bool stop = visit(rest, chosen, depth + 1, forbidden);
      chosen.reset(p);
      if (stop) return true;
      forbidden.set(p);
    }
    return false;
  }

  const PointSet& ground_;
  std::vector<Mask> blocks_;
  std::vector<PointSet> solutions_;
  int budget_ = 0;
  bool first_only_ = false;
};

std::vector<PointSet> search(const Family& f, const PointSet& ground, int budget,
                             bool first_only) {
  if (ground.size() <= 64) {
    return BranchSearch<WordMask>(f, ground).run(budget, first_only);
  }
  return BranchSearch<WideMask>(f, ground).run(budget, first_only);
}

void require_nonempty(const Family& f) {
  if (f.empty()) throw std::invalid_argument("transversals are defined for nonempty families only");
}

}  // namespace

std::optional<PointSet> has_blocking_set_of_size(const Family& f, int s) {
  require_nonempty(f);
  if (s < 0) throw std::invalid_argument("blocking set size must be >= 0");
  const PointSet ground = ground_set(f);
  if (static_cast<std::size_t>(s) > ground.size()) return std::nullopt;
  auto found = search(f, ground, s, true);
  if (found.empty()) return std::nullopt;

  // Any superset of a blocking set blocks; pad with the smallest unused points.
  PointSet result = std::move(found.front());
  for (const auto& p : ground) {
    if (static_cast<int>(result.size()) == s) break;
    if (!std::binary_search(result.begin(), result.end(), p)) {
      result.insert(std::upper_bound(result.begin(), result.end(), p), p);
    }
  }
  return result;
}

TransversalReport tau(const Family& f) {
  require_nonempty(f);
  const PointSet ground = ground_set(f);
  for (int s = 1; s <= static_cast<int>(ground.size()); ++s) {
    auto found = search(f, ground, s, true);
    if (!found.empty()) {
      TransversalReport report;
      report.tau = s;
      report.certificate = Block(std::move(found.front()));
      return report;
    }
  }
  // Unreachable: the whole ground set meets every nonempty block.
  throw std::logic_error("family has an empty block");
}

Family enumerate_transversals(const Family& f) {
  const int size = tau(f).tau;
  const PointSet ground = ground_set(f);
  std::vector<Block> blocks;
  for (auto& s : search(f, ground, size, false)) blocks.emplace_back(std::move(s));
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return Family(std::move(blocks), size);
}

bool is_maximal(const Family& f) {
  require_nonempty(f);
  const int k = static_cast<int>(f.blocks().front().size());
  if (!is_uniform(f, k)) throw std::invalid_argument("maximality is defined for uniform families only");
  const Family transversals = enumerate_transversals(f);
  return transversals.declared_k() == k && transversals == f;
}

}  // namespace cyclefam

#include "cyclefam/construction.hpp"

#include <stdexcept>
#include <string>

namespace cyclefam {
namespace {

void check_domain(int k, int t) {
  if (t < 1 || t > k) {
    throw std::invalid_argument("cycle family needs 1 <= t <= k, got k=" +
                                std::to_string(k) + " t=" + std::to_string(t));
  }
}

}  // namespace

bool GroundLayout::contains(const Point& p) const {
  return p.cycle >= 0 && p.cycle < t && p.position >= 0 &&
         p.position < sizes[static_cast<std::size_t>(p.cycle)];
}

int GroundLayout::total_points() const {
  int total = 0;
  for (int s : sizes) total += s;
  return total;
}

PointSet GroundLayout::points() const {
  PointSet out;
  for (int n = 0; n < t; ++n) {
    for (int p = 0; p < sizes[static_cast<std::size_t>(n)]; ++p) out.push_back({n, p});
  }
  return out;
}

PointSet GroundLayout::cycle_set(int n) const {
  PointSet out;
  for (int p = 0; p < size_of(n); ++p) out.push_back({n % t, p});
  return out;
}

GroundLayout layout(int k, int t) {
  check_domain(k, t);
  GroundLayout g{k, t, {}};
  g.sizes.reserve(static_cast<std::size_t>(t));
  const int boundary = (t - 1) / 2;
  for (int n = 0; n < t; ++n) {
    g.sizes.push_back(n <= boundary ? k - t / 2 : k - (t - 1) / 2);
  }
  return g;
}

PSequence::PSequence(std::vector<int> values) : values_(std::move(values)) {
  int prev = 0;
  for (std::size_t m = 0; m < values_.size(); ++m) {
    if (values_[m] != prev && values_[m] != prev + 1) {
      throw std::invalid_argument("position sequence must stay or step by one at index " +
                                  std::to_string(m + 1));
    }
    prev = values_[m];
  }
}

std::vector<PSequence> enumerate_psequences(int length) {
  if (length < 0) throw std::invalid_argument("sequence length must be >= 0");
  if (length > 30) throw std::invalid_argument("sequence length too large to enumerate");
  std::vector<PSequence> out;
  const std::uint32_t count = 1u << length;
  out.reserve(count);
  for (std::uint32_t code = 0; code < count; ++code) {
    std::vector<int> values(static_cast<std::size_t>(length));
    int p = 0;
    for (int m = 0; m < length; ++m) {
      p += static_cast<int>((code >> (length - 1 - m)) & 1u);
      values[static_cast<std::size_t>(m)] = p;
    }
    out.emplace_back(std::move(values));
  }
  return out;
}

Block block_for(int n, const PSequence& seq, const GroundLayout& g) {
  if (n < 0 || n >= g.t) {
    throw std::out_of_range("cycle index " + std::to_string(n) + " outside [0, " +
                            std::to_string(g.t) + ")");
  }
  if (static_cast<int>(seq.size()) != g.tail_length(n)) {
    throw std::invalid_argument("block from X_" + std::to_string(n) + " needs a sequence of length " +
                                std::to_string(g.tail_length(n)));
  }
  std::vector<Point> points = g.cycle_set(n);
  for (int i = 1; i <= static_cast<int>(seq.size()); ++i) {
    const int target = (n + i) % g.t;
    const int pos = seq[static_cast<std::size_t>(i - 1)];
    if (pos >= g.size_of(target)) {
      throw std::out_of_range("position " + std::to_string(pos) + " outside X_" +
                              std::to_string(target) + " of size " +
                              std::to_string(g.size_of(target)));
    }
    points.push_back({target, pos});
  }
  return Block(std::move(points));
}

Family build_family(int k, int t) {
  const GroundLayout g = layout(k, t);
  std::vector<Block> blocks;
  for (int n = 0; n < t; ++n) {
    for (const auto& seq : enumerate_psequences(g.tail_length(n))) {
      blocks.push_back(block_for(n, seq, g));
    }
  }
  // Family rejects a repeated block, so distinctness is checked here.
  return Family(std::move(blocks), k);
}

std::uint64_t block_count_closed_form(int k, int t) {
  check_domain(k, t);
  const std::uint64_t r = static_cast<std::uint64_t>((t + 1) / 2);
  const std::uint64_t pow2 = std::uint64_t{1} << (r - 1);
  return t % 2 == 1 ? (2 * r - 1) * pow2 : 3 * r * pow2;
}

}  // namespace cyclefam

#pragma once

// Set-system value types shared by every other module: points addressed by
// (cycle index, position), canonical sorted blocks, and families of blocks.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclefam {

/// A ground point x{cycle}.{position}. Ordered lexicographically by
/// (cycle, position), which is the canonical order used for serialization.
struct Point {
  int cycle = 0;
  int position = 0;

  auto operator<=>(const Point&) const = default;

  /// Canonical text form, e.g. "x3.1".
  std::string str() const;

  /// Parses the canonical text form; throws std::invalid_argument otherwise.
  static Point parse(std::string_view text);
};

/// Sorted, duplicate-free list of points.
using PointSet = std::vector<Point>;

/// Sorts and checks for duplicates; throws std::invalid_argument on a repeat.
PointSet make_point_set(std::vector<Point> points);

/// Comma-separated canonical forms, e.g. "x0.0,x1.2". Empty string for {}.
std::string join_points(std::span<const Point> points);

/// Inverse of join_points. Whitespace around entries is ignored.
PointSet parse_point_list(std::string_view text);

class Block {
 public:
  Block() = default;
  explicit Block(std::vector<Point> points);
  Block(std::initializer_list<Point> points);

  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Point& p) const;
  bool intersects(const Block& other) const;
  bool intersects(std::span<const Point> sorted_points) const;

  std::string str() const { return join_points(points_); }

  auto operator<=>(const Block&) const = default;

 private:
  PointSet points_;
};

/// A finite set of distinct blocks, held in canonical order. Equality is set
/// equality of the blocks; the declared block size does not take part.
class Family {
 public:
  Family() = default;

  /// Canonicalizes block order. Throws std::invalid_argument on a repeated
  /// block, or on a block whose size differs from `declared_k`.
  explicit Family(std::vector<Block> blocks,
                  std::optional<int> declared_k = std::nullopt);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<int> declared_k() const { return declared_k_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  bool contains(const Block& b) const;

  friend bool operator==(const Family& a, const Family& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::optional<int> declared_k_;
};

/// Union of all blocks, canonically ordered.
PointSet ground_set(const Family& f);

/// True iff every pair of blocks meets. Vacuously true for at most one block.
bool is_intersecting(const Family& f);

/// True iff `c` meets every block. `c` need not be sorted.
/// Throws std::invalid_argument on an empty family.
bool is_blocking_set(std::span<const Point> c, const Family& f);

/// True iff every block has exactly `k` points. Requires k >= 1.
bool is_uniform(const Family& f, int k);

}  // namespace cyclefam

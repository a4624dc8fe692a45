#include "cyclefam/core.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cyclefam {
namespace {

int parse_index(std::string_view digits, std::string_view whole) {
  int value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last || value < 0) {
    throw std::invalid_argument("malformed point '" + std::string(whole) +
                                "', expected x<cycle>.<position>");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Point::str() const {
  return "x" + std::to_string(cycle) + "." + std::to_string(position);
}

Point Point::parse(std::string_view text) {
  if (text.size() < 4 || text.front() != 'x') {
    throw std::invalid_argument("malformed point '" + std::string(text) +
                                "', expected x<cycle>.<position>");
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    throw std::invalid_argument("malformed point '" + std::string(text) +
                                "', expected x<cycle>.<position>");
  }
  return Point{parse_index(text.substr(1, dot - 1), text),
               parse_index(text.substr(dot + 1), text)};
}

PointSet make_point_set(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  const auto dup = std::adjacent_find(points.begin(), points.end());
  if (dup != points.end()) {
    throw std::invalid_argument("duplicate point " + dup->str());
  }
  return points;
}

std::string join_points(std::span<const Point> points) {
  std::string out;
  for (const auto& p : points) {
    if (!out.empty()) out += ',';
    out += p.str();
  }
  return out;
}

PointSet parse_point_list(std::string_view text) {
  std::vector<Point> points;
  text = trim(text);
  if (text.empty()) return points;
  while (true) {
    const auto comma = text.find(',');
    points.push_back(Point::parse(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return make_point_set(std::move(points));
}

Block::Block(std::vector<Point> points) : points_(make_point_set(std::move(points))) {}

Block::Block(std::initializer_list<Point> points)
    : Block(std::vector<Point>(points)) {}

bool Block::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool Block::intersects(std::span<const Point> sorted_points) const {
  auto a = points_.begin();
  auto b = sorted_points.begin();
  while (a != points_.end() && b != sorted_points.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

bool Block::intersects(const Block& other) const { return intersects(other.points_); }

Family::Family(std::vector<Block> blocks, std::optional<int> declared_k)
    : blocks_(std::move(blocks)), declared_k_(declared_k) {
  std::sort(blocks_.begin(), blocks_.end());
  const auto dup = std::adjacent_find(blocks_.begin(), blocks_.end());
  if (dup != blocks_.end()) {
    throw std::invalid_argument("duplicate block {" + dup->str() + "}");
  }
  if (declared_k_) {
    for (const auto& b : blocks_) {
      if (static_cast<int>(b.size()) != *declared_k_) {
        throw std::invalid_argument("block {" + b.str() + "} has size " +
                                    std::to_string(b.size()) + ", expected " +
                                    std::to_string(*declared_k_));
      }
    }
  }
}

bool Family::contains(const Block& b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

PointSet ground_set(const Family& f) {
  std::vector<Point> points;
  for (const auto& b : f) points.insert(points.end(), b.begin(), b.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool is_intersecting(const Family& f) {
  const auto& blocks = f.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!blocks[i].intersects(blocks[j])) return false;
    }
  }
  return true;
}

bool is_blocking_set(std::span<const Point> c, const Family& f) {
  if (f.empty()) {
    throw std::invalid_argument("blocking sets are defined for nonempty families only");
  }
  std::vector<Point> sorted(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  return std::all_of(f.begin(), f.end(),
                     [&](const Block& b) { return b.intersects(sorted); });
}

bool is_uniform(const Family& f, int k) {
  if (k < 1) throw std::invalid_argument("uniformity requires k >= 1");
  return std::all_of(f.begin(), f.end(), [k](const Block& b) {
    return static_cast<int>(b.size()) == k;
  });
}

}  // namespace cyclefam

#include "cyclefam/witness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclefam/raney.hpp"

namespace cyclefam {
namespace {

int count_in_cycle(const PointSet& c, int cycle) {
  return static_cast<int>(
      std::count_if(c.begin(), c.end(), [cycle](const Point& p) { return p.cycle == cycle; }));
}

bool in_set(const PointSet& c, Point p) { return std::binary_search(c.begin(), c.end(), p); }

template <class Range>
std::string join_ints(const Range& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

WitnessTrace witness_block(int k, int t, std::span<const Point> avoid) {
  const GroundLayout g = layout(k, t);
  const PointSet original = make_point_set({avoid.begin(), avoid.end()});
  for (const auto& p : original) {
    if (!g.contains(p)) {
      throw std::invalid_argument("point " + p.str() + " is not in the ground set of F(" +
                                  std::to_string(k) + "," + std::to_string(t) + ")");
    }
  }
  if (static_cast<int>(original.size()) >= t) {
    throw std::invalid_argument("a set of " + std::to_string(original.size()) +
                                " points may block F(k,t) when t=" + std::to_string(t) +
                                "; witnesses exist only for fewer than t points");
  }

  WitnessTrace trace;

  // Pad with the smallest unused ground points up to t-1.
  PointSet padded = original;
  for (const auto& p : g.points()) {
    if (static_cast<int>(padded.size()) == t - 1) break;
    if (!in_set(original, p)) padded.push_back(p);
  }
  std::sort(padded.begin(), padded.end());
  trace.avoided = padded;

  trace.r.resize(static_cast<std::size_t>(t));
  for (int n = 0; n < t; ++n) trace.r[static_cast<std::size_t>(n)] = 1 - count_in_cycle(padded, n);
  trace.mu = raney_mu(trace.r).mu;

  const int length = g.tail_length(trace.mu);
  std::vector<int> previous{0};
  int hits = 0;
  for (int n = 1; n <= length; ++n) {
    const int cycle = (trace.mu + n) % t;
    hits += count_in_cycle(padded, cycle);
    trace.slack.push_back(n - hits);

    std::vector<int> layer;
    for (int p : previous) {
      for (int q : {p, p + 1}) {
        if (q < g.size_of(cycle) && !in_set(padded, Point{cycle, q})) layer.push_back(q);
      }
    }
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    trace.layers.push_back(layer);
    previous = std::move(layer);
  }
  if (previous.empty()) {
    throw std::logic_error("witness construction reached an empty layer");
  }

  // Backtrack from the smallest final position, preferring the stay edge.
  std::vector<int> seq(static_cast<std::size_t>(length));
  if (length > 0) {
    int p = trace.layers.back().front();
    for (int n = length; n >= 1; --n) {
      seq[static_cast<std::size_t>(n - 1)] = p;
      if (n == 1) break;
      const auto& below = trace.layers[static_cast<std::size_t>(n - 2)];
      if (!std::binary_search(below.begin(), below.end(), p)) --p;
    }
  }
  trace.chosen_sequence = PSequence(std::move(seq));
  trace.block = block_for(trace.mu, trace.chosen_sequence, g);

  if (trace.block.intersects(original)) {
    throw std::logic_error("witness block meets the avoided set");
  }
  return trace;
}

std::string format_trace(const WitnessTrace& trace) {
  std::ostringstream out;
  out << "avoid=" << join_points(trace.avoided) << '\n';
  out << "r=" << join_ints(trace.r) << '\n';
  out << "mu=" << trace.mu << '\n';
  for (std::size_t n = 0; n < trace.layers.size(); ++n) {
    out << "layer " << n + 1 << ": l=" << trace.slack[n] << " P={" << join_ints(trace.layers[n])
        << "}\n";
  }
  out << "sequence=" << join_ints(trace.chosen_sequence.values()) << '\n';
  out << "block=" << trace.block.str() << '\n';
  return out.str();
}

}  // namespace cyclefam

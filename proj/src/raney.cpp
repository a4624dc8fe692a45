#include "cyclefam/raney.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclefam {

RaneyResult raney_mu(std::span<const int> r) {
  if (r.empty()) throw std::invalid_argument("cycle lemma needs a nonempty sequence");
  const long long total = std::accumulate(r.begin(), r.end(), 0LL);
  if (total != 1) {
    throw std::invalid_argument("cycle lemma needs entries summing to 1, got " +
                                std::to_string(total));
  }
  const int t = static_cast<int>(r.size());

  // prefix_n = r_1 + ... + r_n for n = 1..t. Subtracting n/t breaks ties
  // between equal prefix minima toward the later index.
  long long prefix = 0;
  long long best = 0;
  int best_n = 0;
  for (int n = 1; n <= t; ++n) {
    prefix += r[static_cast<std::size_t>(n - 1)];
    if (n == 1 || prefix <= best) {
      best = prefix;
      best_n = n;
    }
  }

  RaneyResult out;
  out.mu = best_n % t;
  out.shifted_partial_sums.reserve(r.size());
  int sum = 0;
  for (int i = 0; i < t; ++i) {
    sum += r[static_cast<std::size_t>((out.mu + i) % t)];
    out.shifted_partial_sums.push_back(sum);
  }
  return out;
}

bool shift_is_positive(std::span<const int> r, int start) {
  const int t = static_cast<int>(r.size());
  if (start < 0 || start >= t) throw std::out_of_range("shift start outside the sequence");
  long long sum = 0;
  for (int i = 0; i < t; ++i) {
    sum += r[static_cast<std::size_t>((start + i) % t)];
    if (sum < 1) return false;
  }
  return true;
}

}  // namespace cyclefam
